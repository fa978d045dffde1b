"""
Permutations of ``{1..n}`` in one-line notation, as plain tuples.

A word ``(i1, i2, ...)`` in the simple transpositions ``s_i = (i, i+1)``
denotes the product ``s_i1 * s_i2 * ...``, composed as functions.  Right
multiplication by ``s_i`` swaps the entries in positions ``i`` and ``i+1``:

>>> from_word((2, 1), 3)
(3, 1, 2)
>>> canonical_reduced_word((3, 2, 1))
(1, 2, 1)
>>> coset_decompose((3, 1, 2), 2)
((1, 2), 1)
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import NewType, Optional, Sequence

__all__ = [
    "Permutation", "identity", "from_word", "length", "inverse", "compose",
    "right_mul", "canonical_reduced_word", "coset_decompose", "all_perms",
    "extend", "restrict", "word_text", "perm_text",
]

# a bijection of {1..n} in one-line notation
Permutation = NewType("Permutation", tuple[int, ...])


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def _check_perm(w: Sequence[int]) -> Permutation:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{list(w)} is not a permutation of 1..{len(w)}")
    return Permutation(w)


def right_mul(w: Permutation, i: int) -> Permutation:
    """``w * s_i``: swap the entries in positions ``i`` and ``i+1``."""
    return Permutation(w[:i - 1] + (w[i], w[i - 1]) + w[i + 1:])


def from_word(word: Sequence[int], n: int) -> Permutation:
    """The product of the simple transpositions listed in ``word``."""
    w = list(range(1, n + 1))
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range 1..{n - 1}")
        w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(tuple(w))


def length(w: Permutation) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for pos, val in enumerate(w, 1):
        out[val - 1] = pos
    return Permutation(tuple(out))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """``u * v`` as functions: ``x -> u(v(x))``."""
    return Permutation(tuple(u[x - 1] for x in v))


def extend(w: Permutation, n: int) -> Permutation:
    """Embed ``w`` into ``S_n`` by adding fixed points."""
    return Permutation(tuple(w) + tuple(range(len(w) + 1, n + 1)))


def restrict(w: Permutation, m: int) -> Permutation:
    """Drop trailing fixed points so that ``w`` lies in ``S_m``."""
    if any(w[k - 1] != k for k in range(m + 1, len(w) + 1)):
        raise ValueError(f"{list(w)} does not lie in S_{m}")
    return Permutation(tuple(w[:m]))


def coset_decompose(w: Permutation, m: int) -> tuple[Permutation, Optional[int]]:
    """
    Split ``w`` in ``S_{m+1}`` as ``u * s_m s_{m-1} ... s_k`` with ``u`` in ``S_m``.

    Returns ``(u, k)``, or ``(u, None)`` when ``w`` fixes ``m+1`` (then
    ``u`` is ``w`` itself, restricted).  Lengths add:
    ``length(w) == length(u) + m - k + 1``.
    """
    if len(w) != m + 1:
        raise ValueError(f"{list(w)} is not in S_{m + 1}")
    k = w.index(m + 1) + 1
    u = Permutation(w[:k - 1] + w[k:])
    return u, (None if k == m + 1 else k)


@lru_cache(maxsize=None)
def canonical_reduced_word(w: Permutation) -> tuple[int, ...]:
    """
    Staircase normal form, by repeated coset decomposition.

    The word is ``(s_{m1}..s_{k1})(s_{m2}..s_{k2})...`` with ``m1 < m2 < ...``;
    its length is the inversion count, and every prefix is again a
    canonical word.
    """
    word: list[int] = []
    w = Permutation(tuple(w))
    for m in range(len(w) - 1, 0, -1):
        w, k = coset_decompose(w, m)
        if k is not None:
            word[:0] = range(m, k - 1, -1)
    return tuple(word)


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Permutation, ...]:
    """All of ``S_n``, sorted by length and then lexicographically."""
    return tuple(sorted((Permutation(p) for p in permutations(range(1, n + 1))),
                        key=lambda p: (length(p), p)))


def perm_text(w: Permutation) -> str:
    return "[" + ",".join(map(str, w)) + "]"


def word_text(word: Sequence[int]) -> str:
    return " ".join(f"s{i}" for i in word)
