"""
The Hecke algebra ``H_n(q)`` on the basis ``{T_w : w in S_n}``.

Elements are sparse maps from permutations to coefficients.  Coefficients
are `RatFunc` when ``q`` is the indeterminate `Q` (symbolic mode) or
`Fraction` when ``q`` is a rational sample point (evaluated mode).  The
only rule used for multiplication is

    T_w T_{s_i} = T_{w s_i}                        if l(w s_i) > l(w)
    T_w T_{s_i} = T_{w s_i} + (q - q^-1) T_w       otherwise,

which is the quadratic relation plus the braid relations.

>>> s1, s2 = generator(1, 3), generator(2, 3)
>>> s1 * s2 * s1 == s2 * s1 * s2
True
>>> print(s1 * s1)
T[] + (-q^-1 + q)*T[s1]
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Mapping, Union

import flint

from .permutations import (
    Permutation, all_perms, canonical_reduced_word, extend, identity, inverse,
    length, perm_text, restrict, right_mul, word_text,
)
from .scalar import Q, RatFunc, as_ratfunc, eval_at, _ONE, _reduce

__all__ = [
    "HeckeElement", "generator", "inverse_generator", "jucys_murphy",
    "jucys_murphy_sum_form", "one_shuffle", "shuffle", "intertwiner",
    "commutator", "basis", "RankError", "random_element",
]

Scalar = Union[int, Fraction, RatFunc]


class RankError(ValueError):
    """Operands live in Hecke algebras of different rank or parameter."""


def _is_symbolic(q) -> bool:
    return isinstance(q, RatFunc)


def _check_q(q):
    if isinstance(q, RatFunc):
        if q != Q:
            raise ValueError("symbolic mode requires q to be the indeterminate Q")
        return Q
    q = Fraction(q)
    if q == 0 or abs(q) == 1:
        raise ValueError(f"q = {q} is not generic")
    return q


def _coerce(c, q):
    if _is_symbolic(q):
        c = as_ratfunc(c)
        if c is NotImplemented:
            raise TypeError(f"cannot use {c!r} as a coefficient")
        return c
    if isinstance(c, RatFunc):
        raise TypeError("symbolic coefficient in an evaluated-q element")
    return Fraction(c)


# -- multiplication tables ---------------------------------------------------

@lru_cache(maxsize=None)
def _right_table(n: int) -> dict:
    """``w -> ((w s_1, ascent?), ..., (w s_{n-1}, ascent?))`` for all of S_n."""
    return {w: tuple((right_mul(w, i), w[i - 1] < w[i]) for i in range(1, n))
            for w in all_perms(n)}


@lru_cache(maxsize=None)
def _parent(w: Permutation) -> tuple[Permutation, int]:
    """Drop the last letter of the canonical word: ``w == parent * s_i``."""
    i = canonical_reduced_word(w)[-1]
    return right_mul(w, i), i


# -- coefficient kernels -------------------------------------------------------
#
# A kernel writes a coefficient vector as ``scale * {w: ring element}`` over an
# integral domain (Q[q] or Z) so that the inner loop needs no gcds.  Right
# multiplication by ``U * T_{s_i}`` then sends an ascent to ``U*P`` and a
# descent additionally to ``W*P`` at the same word, with
# ``W = U (q - q^-1)``.

class _PolyKernel:
    U_SHIFT = 1
    W = flint.fmpq_poly([-1, 0, 1])  # q^2 - 1, with U = q

    @staticmethod
    def split(terms):
        smin = min(c._s for c in terms.values())
        den = None
        for c in terms.values():
            if den is None:
                den = c._d
            elif c._d != den:
                den = den * c._d // den.gcd(c._d)
        ring = {}
        for w, c in terms.items():
            p = c._n.left_shift(c._s - smin)
            if c._d != den:
                p = p * (den // c._d)
            ring[w] = p
        return ring, (smin, den)

    @staticmethod
    def lift(p, k=1):
        return p.left_shift(k) if k else p

    @staticmethod
    def combine_scales(sa, sb, ulen):
        return sa[0] + sb[0] - ulen, sa[1] * sb[1]

    @staticmethod
    def unsplit(p, scale):
        return RatFunc._raw(*_reduce(p, scale[0], scale[1]))


class _IntKernel:
    def __init__(self, q: Fraction):
        a, b = q.numerator, q.denominator
        self.U = a * b
        self.W = a * a - b * b

    @staticmethod
    def split(terms):
        den = lcm(*(c.denominator for c in terms.values()))
        return {w: c.numerator * (den // c.denominator) for w, c in terms.items()}, Fraction(1, den)

    def lift(self, p, k=1):
        return p * self.U ** k if k else p

    def combine_scales(self, sa, sb, ulen):
        return sa * sb / self.U ** ulen

    @staticmethod
    def unsplit(p, scale):
        return p * scale


@lru_cache(maxsize=None)
def _kernel(q):
    return _PolyKernel() if _is_symbolic(q) else _IntKernel(q)


def _act(vec: dict, i: int, table: dict, kernel) -> dict:
    """``vec * (U T_{s_i})`` on ring-valued coefficient maps."""
    out: dict = {}
    W = kernel.W
    lift = kernel.lift
    for v, p in vec.items():
        vs, up = table[v][i - 1]
        lp = lift(p)
        cur = out.get(vs)
        out[vs] = lp if cur is None else cur + lp
        if not up:
            wp = W * p
            cur = out.get(v)
            out[v] = wp if cur is None else cur + wp
    return {v: p for v, p in out.items() if p}


def _prefix_closure(words: Iterable[Permutation]) -> set:
    seen = set()
    for w in words:
        while w not in seen and any(a != b for a, b in zip(w, range(1, len(w) + 1))):
            seen.add(w)
            w = _parent(w)[0]
    return seen


def _multiply_right(a_terms, b_terms, n, kernel):
    """``a * b``, walking the canonical words of the basis words in ``b``."""
    A, sa = kernel.split(a_terms)
    B, sb = kernel.split(b_terms)
    table = _right_table(n)
    e = identity(n)
    nodes = sorted(_prefix_closure(B), key=length)
    R = {e: A}
    for p in nodes:
        parent, i = _parent(p)
        R[p] = _act(R[parent], i, table, kernel)
    top = max(length(w) for w in B)
    by_len: dict[int, dict] = {}
    for w, bw in B.items():
        acc = by_len.setdefault(length(w), {})
        for v, p in R[w].items():
            t = bw * p
            cur = acc.get(v)
            acc[v] = t if cur is None else cur + t
    out: dict = {}
    for ell, acc in by_len.items():
        for v, p in acc.items():
            p = kernel.lift(p, top - ell)
            cur = out.get(v)
            out[v] = p if cur is None else cur + p
    scale = kernel.combine_scales(sa, sb, top)
    return {v: kernel.unsplit(p, scale) for v, p in out.items() if p}


def _inverse_keys(terms: Mapping) -> dict:
    return {inverse(w): c for w, c in terms.items()}


def _multiply(a_terms, b_terms, n, q):
    if not a_terms or not b_terms:
        return {}
    kernel = _kernel(q)
    right_cost = len(_prefix_closure(b_terms)) * len(a_terms)
    left_cost = len(_prefix_closure(a_terms)) * len(b_terms)
    if right_cost <= left_cost:
        return _multiply_right(a_terms, b_terms, n, kernel)
    # T_w -> T_{w^-1} is an anti-automorphism: a*b = iota(iota(b) * iota(a))
    return _inverse_keys(_multiply_right(_inverse_keys(b_terms), _inverse_keys(a_terms), n, kernel))


# -- elements ---------------------------------------------------------------

class HeckeElement:
    """
    An element of ``H_n(q)``: ``sum(c_w * T_w)``.

    No stored coefficient is zero, so ``==`` compares algebra elements.
    Instances are treated as immutable.
    """

    __slots__ = ("n", "q", "terms")

    def __init__(self, n: int, terms: Mapping[Permutation, Scalar] | None = None, q=Q):
        self.n = n
        self.q = _check_q(q)
        clean = {}
        for w, c in (terms or {}).items():
            w = Permutation(tuple(w))
            if len(w) != n:
                raise RankError(f"basis word {list(w)} is not in S_{n}")
            c = _coerce(c, self.q)
            if c:
                clean[w] = c
        self.terms = clean

    @classmethod
    def _make(cls, n, terms, q) -> HeckeElement:
        self = object.__new__(cls)
        self.n, self.q, self.terms = n, q, terms
        return self

    @classmethod
    def scalar(cls, c: Scalar, n: int, q=Q) -> HeckeElement:
        return cls(n, {identity(n): c}, q)

    @classmethod
    def one(cls, n: int, q=Q) -> HeckeElement:
        return cls.scalar(1, n, q)

    @classmethod
    def zero(cls, n: int, q=Q) -> HeckeElement:
        return cls(n, {}, q)

    # -- helpers -------------------------------------------------------------

    def _same(self, other: HeckeElement):
        if self.n != other.n:
            raise RankError(f"rank mismatch: H_{self.n} vs H_{other.n}")
        if self.q != other.q:
            raise RankError(f"parameter mismatch: q = {self.q} vs q = {other.q}")

    def _lift(self, other):
        if isinstance(other, HeckeElement):
            self._same(other)
            return other
        return HeckeElement.scalar(other, self.n, self.q)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, w) -> Scalar:
        c = self.terms.get(Permutation(tuple(w)))
        if c is None:
            return as_ratfunc(0) if _is_symbolic(self.q) else Fraction(0)
        return c

    def scalar_part(self):
        """The coefficient of the identity."""
        return self.coefficient(identity(self.n))

    def is_scalar(self) -> bool:
        return all(w == identity(self.n) for w in self.terms)

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return HeckeElement._make(self.n, out, self.q)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement._make(self.n, {w: -c for w, c in self.terms.items()}, self.q)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> HeckeElement:
        c = _coerce(c, self.q)
        if not c:
            return HeckeElement.zero(self.n, self.q)
        return HeckeElement._make(self.n, {w: c * x for w, x in self.terms.items()}, self.q)

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            return self.scale(other)
        self._same(other)
        return HeckeElement._make(self.n, _multiply(self.terms, other.terms, self.n, self.q), self.q)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c: Scalar):
        c = _coerce(c, self.q)
        return self.scale(1 / c)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = HeckeElement.one(self.n, self.q)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def inverse(self) -> HeckeElement:
        """Inverse of a nonzero multiple of a single basis word."""
        if len(self.terms) != 1:
            raise ValueError("only multiples of a single basis word are inverted")
        (w, c), = self.terms.items()
        out = HeckeElement.scalar(1 / c, self.n, self.q)
        for i in reversed(canonical_reduced_word(w)):
            out = out * inverse_generator(i, self.n, self.q)
        return out

    def __eq__(self, other):
        if isinstance(other, HeckeElement):
            return self.n == other.n and self.q == other.q and self.terms == other.terms
        if isinstance(other, (int, Fraction, RatFunc)):
            return self == HeckeElement.scalar(other, self.n, self.q)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- rank changes and specialisation -----------------------------------------

    def promote(self, n: int) -> HeckeElement:
        """The same element viewed in ``H_n``, ``n >= self.n``."""
        if n < self.n:
            raise RankError(f"cannot promote H_{self.n} element into H_{n}")
        return HeckeElement._make(n, {extend(w, n): c for w, c in self.terms.items()}, self.q)

    def restrict(self, m: int) -> HeckeElement:
        """View an element supported on ``S_m`` as an element of ``H_m``."""
        return HeckeElement._make(m, {restrict(w, m): c for w, c in self.terms.items()}, self.q)

    def evaluate(self, q0) -> HeckeElement:
        """Specialise a symbolic element at the rational point ``q0``."""
        if not _is_symbolic(self.q):
            raise ValueError("element is already evaluated")
        q0 = _check_q(q0)
        return HeckeElement(self.n, {w: eval_at(c, q0) for w, c in self.terms.items()}, q0)

    def support(self) -> list[Permutation]:
        return sorted(self.terms)

    # -- output --------------------------------------------------------------

    def to_json(self) -> dict:
        def coeff(c):
            return c.to_json() if isinstance(c, RatFunc) else str(c)
        return {
            "n": self.n,
            "terms": [{"perm": list(w), "coeff": coeff(self.terms[w])} for w in self.support()],
        }

    @classmethod
    def from_json(cls, obj: dict, q=Q) -> HeckeElement:
        q = _check_q(q)
        terms = {}
        for t in obj["terms"]:
            c = t["coeff"]
            terms[tuple(t["perm"])] = RatFunc.from_json(c) if isinstance(c, dict) else Fraction(c)
        return cls(obj["n"], terms, q)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (length(w), w)):
            c = self.terms[w]
            basis_word = f"T[{word_text(canonical_reduced_word(w))}]"
            text = str(c)
            if c == 1:
                parts.append(basis_word)
            elif c == -1:
                parts.append("-" + basis_word)
            elif any(ch in text.lstrip("-") for ch in " /"):
                parts.append(f"({text})*{basis_word}")
            else:
                parts.append(f"{text}*{basis_word}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"HeckeElement(n={self.n}, {perm_text_map(self.terms)})"


def perm_text_map(terms) -> str:
    return "{" + ", ".join(f"{perm_text(w)}: {c}" for w, c in sorted(terms.items())) + "}"


# -- distinguished elements ----------------------------------------------------

def _check_index(i: int, lo: int, hi: int, what: str):
    if not lo <= i <= hi:
        raise IndexError(f"{what} index {i} out of range {lo}..{hi}")


def basis(w: Permutation, q=Q) -> HeckeElement:
    return HeckeElement(len(w), {tuple(w): 1}, q)


@lru_cache(maxsize=None)
def generator(i: int, n: int, q=Q) -> HeckeElement:
    """``T_{s_i}`` in ``H_n``."""
    _check_index(i, 1, n - 1, "generator")
    return basis(right_mul(identity(n), i), q)


@lru_cache(maxsize=None)
def inverse_generator(i: int, n: int, q=Q) -> HeckeElement:
    """``T_{s_i}^{-1} = T_{s_i} - (q - q^-1)``."""
    _check_index(i, 1, n - 1, "generator")
    q = _check_q(q)
    return generator(i, n, q) - (q - 1 / q)


@lru_cache(maxsize=None)
def jucys_murphy(i: int, n: int, q=Q) -> HeckeElement:
    """``y_1 = 1`` and ``y_{i+1} = T_{s_i} y_i T_{s_i}``."""
    _check_index(i, 1, n, "Jucys-Murphy")
    if i == 1:
        return HeckeElement.one(n, q)
    s = generator(i - 1, n, q)
    return s * jucys_murphy(i - 1, n, q) * s


def jucys_murphy_sum_form(i: int, n: int, q=Q) -> HeckeElement:
    """
    ``1 + (q - q^-1) * sum_k T_{s_k} ... T_{s_{i-1}} ... T_{s_k}``, ``k < i``.

    Each summand is built as an honest product of generators.
    """
    _check_index(i, 1, n, "Jucys-Murphy")
    q = _check_q(q)
    total = HeckeElement.zero(n, q)
    for k in range(1, i):
        word = list(range(k, i)) + list(range(i - 2, k - 1, -1))
        term = HeckeElement.one(n, q)
        for j in word:
            term = term * generator(j, n, q)
        total = total + term
    return 1 + total * (q - 1 / q)


def one_shuffle(k: int, n: int, q=Q) -> HeckeElement:
    """``f_{1->1} = 1``, ``f_{1->k+1} = 1 + f_{1->k} T_{s_k}``, inside ``H_n``."""
    f = HeckeElement.one(n, q)
    for j in range(1, k):
        f = 1 + f * generator(j, n, q)
    return f


def shuffle(n: int, q=Q) -> HeckeElement:
    """``f_{1->n} f_{1->n-1} ... f_{1->1}``; every basis word appears once."""
    if n < 1:
        raise ValueError("shuffle element needs n >= 1")
    out = HeckeElement.one(n, q)
    for k in range(n, 0, -1):
        out = out * one_shuffle(k, n, q)
    return out


@lru_cache(maxsize=None)
def intertwiner(m: int, n: int, q=Q) -> HeckeElement:
    """``U_{m+1} = T_{s_m} y_m - y_m T_{s_m}`` in ``H_n``."""
    _check_index(m, 1, n - 1, "intertwiner")
    s, y = generator(m, n, q), jucys_murphy(m, n, q)
    return s * y - y * s


def commutator(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    return a * b - b * a


def random_element(n: int, rng, q=Q, terms: int = 4) -> HeckeElement:
    """A sparse element with small coefficients ``c * q^k``; ``rng`` is a ``random.Random``."""
    perms = all_perms(n)
    out = HeckeElement.zero(n, q)
    for _ in range(terms):
        w = rng.choice(perms)
        c = Fraction(rng.randint(-3, 3) or 1, rng.randint(1, 3))
        out = out + basis(w, q).scale(c * q ** rng.randint(-2, 2))
    return out
