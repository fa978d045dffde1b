"""
Primitive orthogonal idempotents of ``H_n(q)`` built from Jucys-Murphy elements.

Each standard tableau is a path in the coloured Young graph.  Walking the
path one node at a time, the idempotent of a tableau with ``N`` nodes is
extended by the Lagrange-type projector

    Pi_j = prod_{r != j} (y_{N+1} - q^(2 e_r)) / (q^(2 e_j) - q^(2 e_r)),

where ``e_r`` runs over the contents of all addable nodes and ``j`` is the
node actually added.  The root datum is ``1`` in ``H_0``.

>>> recs = resolution(2)
>>> [r.eigenvalues for r in recs]
[(0, -1), (0, 1)]
>>> print(recs[1].element)
(1/(1 + q^2))*T[] + (q/(1 + q^2))*T[s1]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .hecke import HeckeElement, generator, jucys_murphy
from .scalar import Q
from .tableaux import (
    ContentString, StandardTableau, YoungDiagram, content_string,
)

__all__ = [
    "Corner", "IdempotentRecord", "SymbolicLimitError", "SYMBOLIC_LIMIT",
    "addable_corners", "root_record", "extend_idempotent", "resolution",
    "records_by_level", "branching_annihilator_check", "spectral_projectors",
    "verify_resolution", "prop3_check", "qpow_of",
]

# ranks above this are refused in symbolic mode; evaluated-q mode has no limit
SYMBOLIC_LIMIT = 5


class SymbolicLimitError(ValueError):
    pass


@dataclass(frozen=True)
class Corner:
    row: int
    col: int

    @property
    def exponent(self) -> int:
        """Content of the node; ``y`` acts on the new node by ``q**(2*exponent)``."""
        return self.col - self.row


def addable_corners(shape: YoungDiagram) -> list[Corner]:
    """Addable nodes, top row first; exponents strictly decrease."""
    return [Corner(r, c) for r, c in shape.addable()]


@dataclass(frozen=True)
class IdempotentRecord:
    tableau: StandardTableau
    element: HeckeElement
    eigenvalues: ContentString

    @property
    def shape(self) -> YoungDiagram:
        return self.tableau.shape

    @property
    def n(self) -> int:
        return self.element.n

    def to_json(self) -> dict:
        return {
            "tableau": self.tableau.to_list(),
            "eigenvalues": list(self.eigenvalues),
            "element": self.element.to_json(),
        }


def qpow_of(q, k: int):
    """``q**k`` for either kind of parameter."""
    return q ** k


def root_record(q=Q) -> IdempotentRecord:
    return IdempotentRecord(StandardTableau(()), HeckeElement.one(0, q), ())


def _projector_factors(shape: YoungDiagram, j: int, q):
    """Linear factors ``(y - q^(2 e_r), scalar)`` of ``Pi_j`` and its normaliser."""
    corners = addable_corners(shape)
    mu = q ** (2 * corners[j].exponent)
    roots, norm = [], 1
    for r, corner in enumerate(corners):
        if r == j:
            continue
        nu = q ** (2 * corner.exponent)
        denom = mu - nu
        assert denom != 0, "distinct contents must give distinct eigenvalues"
        roots.append(nu)
        norm = norm * denom
    return roots, norm


def extend_idempotent(rec: IdempotentRecord, j: int) -> IdempotentRecord:
    """
    Add the ``j``-th addable corner (0-based, top row first) to ``rec``.

    Returns the idempotent ``e * Pi_j`` in ``H_{N+1}``.
    """
    shape = rec.shape
    corners = addable_corners(shape)
    if not 0 <= j < len(corners):
        raise IndexError(f"corner {j} is not addable to {shape}")
    q = rec.element.q
    n1 = rec.n + 1
    y = jucys_murphy(n1, n1, q)
    roots, norm = _projector_factors(shape, j, q)
    element = rec.element.promote(n1)
    for nu in roots:
        element = element * y - element.scale(nu)
    element = element / norm
    node = corners[j]
    rows = [list(r) for r in rec.tableau.rows]
    if node.row > len(rows):
        rows.append([])
    rows[node.row - 1].append(n1)
    tableau = StandardTableau.from_rows(rows)
    return IdempotentRecord(tableau, element, rec.eigenvalues + (node.exponent,))


def spectral_projectors(rec: IdempotentRecord) -> list[tuple[Corner, HeckeElement]]:
    """``P_j = e * Pi_j`` for every addable corner; they sum to ``e``."""
    corners = addable_corners(rec.shape)
    return [(c, extend_idempotent(rec, j).element) for j, c in enumerate(corners)]


def branching_annihilator_check(rec: IdempotentRecord) -> bool:
    """``e * prod_r (y_{N+1} - q^(2 e_r)) == 0`` over all addable corners."""
    q = rec.element.q
    n1 = rec.n + 1
    y = jucys_murphy(n1, n1, q)
    x = rec.element.promote(n1)
    for corner in addable_corners(rec.shape):
        x = x * y - x.scale(q ** (2 * corner.exponent))
        if x.is_zero():
            return True
    return x.is_zero()


_LEVELS: dict = {}


def records_by_level(n: int, q=Q, symbolic_limit: Optional[int] = None) -> list[list[IdempotentRecord]]:
    """
    Levels ``0..n`` of the idempotent tree, each sorted by content string.

    Levels are memoised per parameter ``q`` and only ever appended to.
    """
    limit = SYMBOLIC_LIMIT if symbolic_limit is None else symbolic_limit
    if not isinstance(q, Fraction) and not isinstance(q, int) and n > limit:
        raise SymbolicLimitError(
            f"rank {n} exceeds the symbolic limit {limit}; "
            "use evaluated-q mode (a rational q) or raise the limit")
    if not isinstance(q, (Fraction, int)):
        key = "symbolic"
    else:
        q = Fraction(q)
        key = q
    levels = _LEVELS.setdefault(key, [[root_record(q)]])
    while len(levels) <= n:
        nxt = []
        for rec in levels[-1]:
            for j in range(len(addable_corners(rec.shape))):
                nxt.append(extend_idempotent(rec, j))
        nxt.sort(key=lambda r: r.eigenvalues)
        levels.append(nxt)
    return levels[:n + 1]


def resolution(n: int, q=Q, symbolic_limit: Optional[int] = None) -> list[IdempotentRecord]:
    """One idempotent per standard tableau with ``n`` nodes."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return records_by_level(n, q, symbolic_limit)[n]


def verify_resolution(records: list[IdempotentRecord], pairwise: bool = True) -> dict[str, bool]:
    """
    Exact checks on a full resolution of ``H_n``.

    Keys: ``sum_is_one``, ``idempotent``, ``orthogonal``, ``eigenvalues``
    (left and right action of every ``y_i``), ``spectrum_bound``,
    ``distinct_strings``, ``tableau_strings``.

    With ``pairwise=False`` the products ``e_a e_b`` are not formed.
    Orthogonality then follows from the other keys: if the strings differ at
    ``i`` then ``a e_a e_b = e_a y_i e_b = b e_a e_b`` with ``a != b``.
    """
    n = records[0].n
    q = records[0].element.q
    total = HeckeElement.zero(n, q)
    for r in records:
        total = total + r.element
    out = {"sum_is_one": total == HeckeElement.one(n, q)}
    idem = orth = True
    for a in records:
        idem &= a.element * a.element == a.element
        if pairwise:
            for b in records:
                if a is not b:
                    orth &= (a.element * b.element).is_zero()
    out["idempotent"] = idem
    eig = True
    for r in records:
        for i in range(2, n + 1):
            y = jucys_murphy(i, n, q)
            target = r.element.scale(q ** (2 * r.eigenvalues[i - 1]))
            eig &= y * r.element == target and r.element * y == target
        eig &= r.eigenvalues[:1] in ((), (0,))
    out["eigenvalues"] = eig
    out["spectrum_bound"] = all(abs(m) <= i for r in records for i, m in enumerate(r.eigenvalues))
    out["distinct_strings"] = len({r.eigenvalues for r in records}) == len(records)
    out["tableau_strings"] = all(content_string(r.tableau) == r.eigenvalues for r in records)
    if not pairwise:
        orth = eig and out["distinct_strings"]
    out["orthogonal"] = orth
    return out


def prop3_check(rec: IdempotentRecord) -> bool:
    """
    Local two-generator action on ``e`` for every ``i``.

    If ``a_{i+1} = q^(+-2) a_i`` then ``T_{s_i} e = +-q^(+-1) e``.  Otherwise
    with ``v1 = e`` and ``v2 = T_{s_i} e + r e``, ``r = (q-q^-1) a_{i+1}/(a_i-a_{i+1})``,
    the actions of ``T_{s_i}``, ``y_i``, ``y_{i+1}`` on ``(v1, v2)`` are the
    diagonalised 2x2 block.
    """
    e = rec.element
    n, q = e.n, e.q
    h = q - 1 / q
    for i in range(1, n):
        mi, mj = rec.eigenvalues[i - 1], rec.eigenvalues[i]
        s = generator(i, n, q)
        if mj == mi + 1:
            if s * e != e.scale(q):
                return False
            continue
        if mj == mi - 1:
            if s * e != e.scale(-1 / q):
                return False
            continue
        ai, aj = q ** (2 * mi), q ** (2 * mj)
        r = h * aj / (ai - aj)
        v1 = e
        v2 = s * e + e.scale(r)
        if v2.is_zero():
            return False
        block = [[-r, 1 - h * h * ai * aj / (ai - aj) ** 2], [1, h * ai / (ai - aj)]]
        images = [s * v1, s * v2]
        for col, img in enumerate(images):
            if img != v1.scale(block[0][col]) + v2.scale(block[1][col]):
                return False
        yi, yj = jucys_murphy(i, n, q), jucys_murphy(i + 1, n, q)
        if yi * v1 != v1.scale(ai) or yi * v2 != v2.scale(aj):
            return False
        if yj * v1 != v1.scale(aj) or yj * v2 != v2.scale(ai):
            return False
    return True
