"""
Young diagrams, standard tableaux, contents, and the coloured Young graph.

Nodes are addressed as ``(row, column)``, both starting at 1.  The content
of a node is ``column - row``; the Jucys-Murphy eigenvalue it stands for is
``q**(2 * content)``.

>>> t = StandardTableau.from_rows([[1, 2, 4, 6], [3, 5, 8], [7]])
>>> content_string(t)
(0, 1, -1, 2, 0, 3, -2, 1)
>>> frobenius_dim(YoungDiagram((3, 2)))
5
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterator, NamedTuple, Optional, Sequence

__all__ = [
    "YoungDiagram", "StandardTableau", "ContentString", "Verdict",
    "ColouredYoungGraph", "Correspondence", "partitions", "enumerate_standard",
    "content_string", "validate_string", "frobenius_dim", "hook_lengths",
    "young_graph", "bijections", "tableau_from_string", "all_tableaux",
    "candidate_strings", "edge_label",
]

Node = tuple[int, int]

# exponents m_1..m_n of a Jucys-Murphy eigenvalue string (a_i = q^(2 m_i))
ContentString = tuple[int, ...]


@dataclass(frozen=True, order=True)
class YoungDiagram:
    """A partition, stored as weakly decreasing positive row lengths."""
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if any(r < 1 for r in rows) or any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"{list(rows)} is not a Young diagram")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def parse(cls, text: str) -> YoungDiagram:
        """Accepts ``"3,2,1"``, ``"(3,2,1)"`` or ``""`` for the empty diagram."""
        body = text.strip().strip("()[]").strip()
        if not body:
            return cls(())
        return cls(tuple(int(p) for p in body.split(",")))

    @property
    def size(self) -> int:
        return sum(self.rows)

    def __len__(self):
        return len(self.rows)

    def conjugate(self) -> YoungDiagram:
        if not self.rows:
            return self
        return YoungDiagram(tuple(sum(1 for r in self.rows if r >= c)
                                  for c in range(1, self.rows[0] + 1)))

    def nodes(self) -> list[Node]:
        return [(r, c) for r, length in enumerate(self.rows, 1) for c in range(1, length + 1)]

    def __contains__(self, node: Node) -> bool:
        r, c = node
        return 1 <= r <= len(self.rows) and 1 <= c <= self.rows[r - 1]

    def addable(self) -> list[Node]:
        """Addable nodes, top row first (so contents strictly decrease)."""
        out = []
        for r in range(1, len(self.rows) + 2):
            c = self.rows[r - 1] + 1 if r <= len(self.rows) else 1
            if r == 1 or self.rows[r - 2] >= c:
                out.append((r, c))
        return out

    def removable(self) -> list[Node]:
        return [(r, length) for r, length in enumerate(self.rows, 1)
                if r == len(self.rows) or self.rows[r] < length]

    def add(self, node: Node) -> YoungDiagram:
        if node not in self.addable():
            raise ValueError(f"node {node} is not addable to {self}")
        r, _ = node
        rows = list(self.rows)
        if r > len(rows):
            rows.append(1)
        else:
            rows[r - 1] += 1
        return YoungDiagram(tuple(rows))

    def remove(self, node: Node) -> YoungDiagram:
        if node not in self.removable():
            raise ValueError(f"node {node} is not removable from {self}")
        rows = list(self.rows)
        rows[node[0] - 1] -= 1
        return YoungDiagram(tuple(r for r in rows if r))

    def __str__(self):
        return "(" + ",".join(map(str, self.rows)) + ")"


def partitions(n: int, largest: Optional[int] = None) -> list[YoungDiagram]:
    """All diagrams with ``n`` nodes, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return [YoungDiagram(())]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append(YoungDiagram((first,) + rest.rows))
    return out


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling, stored as rows of entries."""
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = YoungDiagram(tuple(len(r) for r in rows))
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, shape.size + 1)):
            raise ValueError(f"entries of {rows} are not 1..{shape.size}")
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if c and row[c - 1] >= x:
                    raise ValueError(f"row {r + 1} of {rows} is not increasing")
                if r and rows[r - 1][c] >= x:
                    raise ValueError(f"column {c + 1} of {rows} is not increasing")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> StandardTableau:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def parse(cls, text: str) -> StandardTableau:
        return cls.from_rows(json.loads(text))

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def position(self, entry: int) -> Node:
        for r, row in enumerate(self.rows, 1):
            if entry in row:
                return r, row.index(entry) + 1
        raise KeyError(entry)

    def restrict(self, m: int) -> StandardTableau:
        """The subtableau holding ``1..m``."""
        rows = tuple(tuple(x for x in row if x <= m) for row in self.rows)
        return StandardTableau(tuple(r for r in rows if r))

    def swap(self, i: int) -> Optional[StandardTableau]:
        """Exchange ``i`` and ``i+1``; None if the result is not standard."""
        table = {i: i + 1, i + 1: i}
        rows = tuple(tuple(table.get(x, x) for x in row) for row in self.rows)
        try:
            return StandardTableau(rows)
        except ValueError:
            return None

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self):
        return json.dumps(self.to_list(), separators=(",", ":"))


def content_string(t: StandardTableau) -> ContentString:
    """``m_i = column - row`` of the node holding ``i``."""
    out = [0] * t.size
    for r, row in enumerate(t.rows, 1):
        for c, x in enumerate(row, 1):
            out[x - 1] = c - r
    return tuple(out)


def tableau_from_string(exps: Sequence[int]) -> Optional[StandardTableau]:
    """Rebuild the tableau whose content string is ``exps``, or None."""
    shape = YoungDiagram(())
    rows: list[list[int]] = []
    for i, m in enumerate(exps, 1):
        hits = [(r, c) for r, c in shape.addable() if c - r == m]
        if not hits:
            return None
        (r, c), = hits
        shape = shape.add((r, c))
        if r > len(rows):
            rows.append([])
        rows[r - 1].append(i)
    return StandardTableau.from_rows(rows)


@lru_cache(maxsize=None)
def _fillings(shape: YoungDiagram) -> tuple[StandardTableau, ...]:
    if shape.size == 0:
        return (StandardTableau(()),)
    n = shape.size
    out = []
    for node in shape.removable():
        for t in _fillings(shape.remove(node)):
            rows = [list(r) for r in t.rows]
            if node[0] > len(rows):
                rows.append([])
            rows[node[0] - 1].append(n)
            out.append(StandardTableau.from_rows(rows))
    return tuple(out)


def enumerate_standard(shape: YoungDiagram) -> list[StandardTableau]:
    """All standard tableaux of ``shape``, sorted by content string."""
    return sorted(_fillings(shape), key=content_string)


def all_tableaux(n: int) -> list[StandardTableau]:
    """``T(n)``, sorted by content string."""
    return sorted((t for lam in partitions(n) for t in _fillings(lam)), key=content_string)


class Verdict(NamedTuple):
    ok: bool
    condition: Optional[int] = None   # 1, 2 or 3 when violated
    index: Optional[int] = None       # 1-based position where it was detected
    reason: str = ""


def validate_string(exps: Sequence[int]) -> Verdict:
    """
    Decide whether ``exps`` is a Jucys-Murphy spectrum string.

    The three conditions are scanned left to right and the first violation
    is reported:

    1. ``m_1 == 0``;
    2. every ``m_j = z != 0`` is preceded by ``z - 1`` or ``z + 1``;
    3. between two occurrences of ``z`` both ``z - 1`` and ``z + 1`` occur.

    >>> validate_string((0, 1, 0))
    Verdict(ok=False, condition=3, index=3, reason='between positions 1 and 3 (value 0) missing -1')
    """
    exps = tuple(exps)
    if not exps:
        return Verdict(True)
    if exps[0] != 0:
        return Verdict(False, 1, 1, f"first exponent is {exps[0]}, not 0")
    last_seen: dict[int, int] = {0: 0}
    for j in range(1, len(exps)):
        z = exps[j]
        before = exps[:j]
        if z != 0 and z - 1 not in before and z + 1 not in before:
            return Verdict(False, 2, j + 1, f"value {z} has no neighbour {z - 1} or {z + 1} before it")
        if z in last_seen:
            i = last_seen[z]
            between = exps[i + 1:j]
            for need in (z - 1, z + 1):
                if need not in between:
                    return Verdict(False, 3, j + 1,
                                   f"between positions {i + 1} and {j + 1} (value {z}) missing {need}")
        last_seen[z] = j
    return Verdict(True)


def candidate_strings(n: int) -> Iterator[ContentString]:
    """Every string with ``m_1 = 0`` and ``|m_i| <= i - 1``."""
    return product(*(range(1 - i, i) for i in range(1, n + 1)))


def hook_lengths(shape: YoungDiagram) -> dict[Node, int]:
    """``h(r, c) = arm + leg + 1``."""
    conj = shape.conjugate().rows
    return {(r, c): (shape.rows[r - 1] - c) + (conj[c - 1] - r) + 1 for r, c in shape.nodes()}


def frobenius_dim(shape: YoungDiagram) -> int:
    """``n! / (h_1! ... h_k!) * prod_{i<j} (h_i - h_j)`` over first-column hooks."""
    k = len(shape.rows)
    h = [shape.rows[i] + k - 1 - i for i in range(k)]
    num = factorial(shape.size) * prod(h[i] - h[j] for i in range(k) for j in range(i + 1, k))
    den = prod(factorial(x) for x in h)
    return num // den


# -- the coloured Young graph ---------------------------------------------------

def edge_label(content: int) -> str:
    """
    The eigenvalue ``q^(2c)`` carried by an edge, as text.

    >>> [edge_label(c) for c in (0, 1, -3)]
    ['1', 'q^2', 'q^-6']
    """
    return "1" if content == 0 else f"q^{2 * content}"


@dataclass
class ColouredYoungGraph:
    """Diagrams up to ``n`` nodes; each edge carries the content of the added node."""
    n: int
    levels: list[list[YoungDiagram]]
    edges: list[tuple[YoungDiagram, YoungDiagram, int]] = field(default_factory=list)

    def children(self, lam: YoungDiagram) -> list[tuple[YoungDiagram, int]]:
        return [(b, c) for a, b, c in self.edges if a == lam]

    def paths(self, depth: Optional[int] = None) -> list[tuple[tuple[YoungDiagram, ...], ContentString]]:
        """Every path from the empty diagram with ``depth`` edges, with its colours."""
        depth = self.n if depth is None else depth
        out = []

        def walk(path, colours):
            if len(colours) == depth:
                out.append((tuple(path), tuple(colours)))
                return
            for child, c in self.children(path[-1]):
                walk(path + [child], colours + [c])

        walk([YoungDiagram(())], [])
        return sorted(out, key=lambda pc: pc[1])

    def colours(self) -> set[int]:
        return {c for _, _, c in self.edges}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": [[list(lam.rows) for lam in level] for level in self.levels],
            "edges": [{"from": list(a.rows), "to": list(b.rows), "colour": c}
                      for a, b, c in self.edges],
        }

    def to_dot(self) -> str:
        def name(lam):
            return '"' + (str(lam) if lam.rows else "()") + '"'
        lines = ["digraph young {", "  rankdir=TB;"]
        for level in self.levels:
            lines.append("  { rank=same; " + " ".join(name(l) for l in level) + " }")
        for a, b, c in self.edges:
            lines.append(f'  {name(a)} -> {name(b)} [label="{edge_label(c)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def young_graph(n: int) -> ColouredYoungGraph:
    levels = [partitions(k) for k in range(n + 1)]
    edges = []
    for level in levels[:-1]:
        for lam in level:
            for r, c in lam.addable():
                edges.append((lam, lam.add((r, c)), c - r))
    return ColouredYoungGraph(n, levels, edges)


@dataclass
class Correspondence:
    """Tableaux, spectrum strings and graph paths of one size, index-aligned."""
    n: int
    tableaux: list[StandardTableau]
    strings: list[ContentString]
    paths: list[tuple[YoungDiagram, ...]]

    def check(self) -> bool:
        """All three maps are mutually inverse bijections and every string validates."""
        if not (len(self.tableaux) == len(self.strings) == len(self.paths)):
            return False
        if len(set(self.tableaux)) != len(self.tableaux) or len(set(self.strings)) != len(self.strings):
            return False
        if len(set(self.paths)) != len(self.paths):
            return False
        for t, s, p in zip(self.tableaux, self.strings, self.paths):
            if content_string(t) != s or tableau_from_string(s) != t:
                return False
            if _path_of(t) != p or p[-1] != t.shape:
                return False
            if not validate_string(s).ok:
                return False
        return len(self.tableaux) == sum(frobenius_dim(lam) for lam in partitions(self.n))


def _path_of(t: StandardTableau) -> tuple[YoungDiagram, ...]:
    return tuple(t.restrict(m).shape for m in range(t.size + 1))


def bijections(n: int) -> Correspondence:
    """Build ``T(n) <-> Spec <-> Str(n) <-> X(n)`` from the graph side."""
    graph = young_graph(n)
    paths = graph.paths(n)
    strings = [colours for _, colours in paths]
    tableaux = [tableau_from_string(s) for s in strings]
    return Correspondence(n, tableaux, strings, [p for p, _ in paths])
