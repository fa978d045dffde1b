"""
Exact Laurent polynomials and rational functions in one indeterminate ``q``.

Coefficients are rationals of unbounded size.  A `RatFunc` is always kept in
canonical form (coprime numerator and denominator, denominator a monic
polynomial with nonzero constant term), so ``==`` is mathematical equality.

>>> x = (Q**2 - Q**-2) / (Q - Q**-1)
>>> str(x)
'q^-1 + q'
>>> quantum_int(3)
RatFunc('q^-2 + 1 + q^2')
>>> eval_at(markov_weight(2), 3)
Fraction(10, 27)

Evaluation helpers assume ``q`` is generic: nothing here checks that a
sample point avoids roots of unity, only that denominators do not vanish.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

import flint

__all__ = [
    "LaurentPoly", "RatFunc", "Q", "EvaluationError",
    "quantum_int", "markov_weight", "eval_at", "qpow", "as_ratfunc",
]

Rational = Union[int, Fraction]


class EvaluationError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a pole."""


def _fmpq(c: Rational) -> flint.fmpq:
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _frac(c: flint.fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _valuation(p: flint.fmpq_poly) -> int:
    for i, c in enumerate(p.coeffs()):
        if c != 0:
            return i
    raise ValueError("zero polynomial has no valuation")


_ONE = flint.fmpq_poly([1])
_ZERO = flint.fmpq_poly([])


class LaurentPoly:
    """
    A Laurent polynomial ``q**shift * poly(q)`` with ``poly(0) != 0``.

    `terms` exposes the exponent -> coefficient map; no stored coefficient
    is zero.
    """

    __slots__ = ("_poly", "_shift", "_hash")

    def __init__(self, terms: dict[int, Rational] | None = None):
        terms = {e: Fraction(c) for e, c in (terms or {}).items() if c != 0}
        if not terms:
            self._poly, self._shift = _ZERO, 0
        else:
            lo = min(terms)
            coeffs = [0] * (max(terms) - lo + 1)
            for e, c in terms.items():
                coeffs[e - lo] = _fmpq(c)
            self._poly, self._shift = flint.fmpq_poly(coeffs), lo
        self._hash = None

    @classmethod
    def _make(cls, poly: flint.fmpq_poly, shift: int) -> LaurentPoly:
        self = object.__new__(cls)
        if not poly:
            poly, shift = _ZERO, 0
        elif poly.coeffs()[0] == 0:
            v = _valuation(poly)
            poly, shift = poly.right_shift(v), shift + v
        self._poly, self._shift, self._hash = poly, shift, None
        return self

    @property
    def terms(self) -> dict[int, Fraction]:
        return {self._shift + i: _frac(c)
                for i, c in enumerate(self._poly.coeffs()) if c != 0}

    def is_zero(self) -> bool:
        return not self._poly

    @property
    def min_exp(self) -> int:
        return self._shift

    @property
    def max_exp(self) -> int:
        return self._shift + self._poly.degree()

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly({0: other})
        s = min(self._shift, other._shift)
        p = (self._poly.left_shift(self._shift - s)
             + other._poly.left_shift(other._shift - s))
        return LaurentPoly._make(p, s)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._make(-self._poly, self._shift)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly._make(self._poly * _fmpq(other), self._shift)
        return LaurentPoly._make(self._poly * other._poly, self._shift + other._shift)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly({0: other})
            else:
                return NotImplemented
        return self._shift == other._shift and self._poly == other._poly

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._shift, tuple(self.terms.items())))
        return self._hash

    def __call__(self, x: Rational) -> Fraction:
        x = Fraction(x)
        if x == 0 and self._shift < 0:
            raise EvaluationError("negative power of q at q = 0")
        return _frac(self._poly(_fmpq(x))) * x ** self._shift

    def __repr__(self):
        return f"LaurentPoly({self.terms!r})"

    def __str__(self):
        return _render_terms(self.terms)


def _render_terms(terms: dict[int, Fraction]) -> str:
    if not terms:
        return "0"
    out = []
    for e in sorted(terms):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if e == 0:
            body = str(c)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if c == 1 else f"{c}*{mono}"
        if not out:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


class RatFunc:
    """
    A rational function ``num / den`` in canonical form.

    The denominator is an ordinary polynomial with nonzero constant term and
    leading coefficient 1; all powers of ``q`` live in the numerator.
    Instances are immutable and hashable.
    """

    __slots__ = ("_n", "_s", "_d", "_hash")

    def __init__(self, num: LaurentPoly | Rational = 0, den: LaurentPoly | Rational = 1):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly({0: num})
        if not isinstance(den, LaurentPoly):
            den = LaurentPoly({0: den})
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self._set(*_reduce(num._poly, num._shift - den._shift, den._poly))

    def _set(self, n, s, d):
        self._n, self._s, self._d, self._hash = n, s, d, None

    @classmethod
    def _raw(cls, n: flint.fmpq_poly, s: int, d: flint.fmpq_poly) -> RatFunc:
        self = object.__new__(cls)
        self._set(n, s, d)
        return self

    @classmethod
    def _canon(cls, n, s, d) -> RatFunc:
        self = object.__new__(cls)
        self._set(*_reduce(n, s, d))
        return self

    # -- accessors ---------------------------------------------------------

    @property
    def num(self) -> LaurentPoly:
        return LaurentPoly._make(self._n, self._s)

    @property
    def den(self) -> LaurentPoly:
        return LaurentPoly._make(self._d, 0)

    def is_zero(self) -> bool:
        return not self._n

    def __bool__(self):
        return bool(self._n)

    def is_laurent(self) -> bool:
        return self._d.is_one()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return other
        if not other._n:
            return self
        if not self._n:
            return other
        s = min(self._s, other._s)
        a = self._n.left_shift(self._s - s)
        b = other._n.left_shift(other._s - s)
        if self._d == other._d:
            return RatFunc._canon(a + b, s, self._d)
        return RatFunc._canon(a * other._d + b * self._d, s, self._d * other._d)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self._n, self._s, self._d)

    def __sub__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return other
        if not self._n or not other._n:
            return ZERO
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        if not d2.is_one():
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 // g, d2 // g
        if not d1.is_one():
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 // g, d1 // g
        return RatFunc._monic(n1 * n2, self._s + other._s, d1 * d2)

    __rmul__ = __mul__

    @classmethod
    def _monic(cls, n, s, d) -> RatFunc:
        lc = d.leading_coefficient()
        if lc != 1:
            n, d = n / lc, d / lc
        if n.coeffs()[0] == 0:
            v = _valuation(n)
            n, s = n.right_shift(v), s + v
        return cls._raw(n, s, d)

    def inverse(self) -> RatFunc:
        if not self._n:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc._monic(self._d, -self._s, self._n)

    def __truediv__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_ratfunc(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if self._d.is_one():
            return RatFunc._raw(self._n ** k, self._s * k, _ONE)
        return RatFunc._raw(self._n ** k, self._s * k, self._d ** k)

    def __eq__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return other
        return self._s == other._s and self._n == other._n and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- evaluation and output ---------------------------------------------

    def __call__(self, q0: Rational) -> Fraction:
        return eval_at(self, q0)

    def to_json(self) -> dict:
        return {
            "num": [[e, str(c)] for e, c in sorted(self.num.terms.items())],
            "den": [[e, str(c)] for e, c in sorted(self.den.terms.items())],
        }

    @classmethod
    def from_json(cls, obj: dict) -> RatFunc:
        num = LaurentPoly({int(e): Fraction(c) for e, c in obj["num"]})
        den = LaurentPoly({int(e): Fraction(c) for e, c in obj["den"]})
        return cls(num, den)

    def __str__(self):
        num_terms, den_terms = self.num.terms, self.den.terms
        num = _render_terms(num_terms)
        if self._d.is_one():
            return num
        den = _render_terms(den_terms)
        if len(num_terms) > 1:
            num = f"({num})"
        if len(den_terms) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def _reduce(n: flint.fmpq_poly, s: int, d: flint.fmpq_poly):
    """Canonical (numerator, shift, denominator) for ``q**s * n / d``."""
    if not n:
        return _ZERO, 0, _ONE
    if d.coeffs()[0] == 0:
        v = _valuation(d)
        d, s = d.right_shift(v), s - v
    if not d.is_constant():
        g = n.gcd(d)
        if not g.is_one():
            n, d = n // g, d // g
    lc = d.leading_coefficient()
    if lc != 1:
        n, d = n / lc, d / lc
    if n.coeffs()[0] == 0:
        v = _valuation(n)
        n, s = n.right_shift(v), s + v
    return n, s, d


def as_ratfunc(x) -> RatFunc:
    """Coerce ints, Fractions and Laurent polynomials; NotImplemented otherwise."""
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        if x == 0:
            return ZERO
        return RatFunc._raw(flint.fmpq_poly([_fmpq(x)]), 0, _ONE)
    if isinstance(x, LaurentPoly):
        return RatFunc._raw(x._poly, x._shift, _ONE)
    return NotImplemented


ZERO = RatFunc._raw(_ZERO, 0, _ONE)
ONE = RatFunc._raw(_ONE, 0, _ONE)
Q = RatFunc._raw(_ONE, 1, _ONE)


def qpow(k: int) -> RatFunc:
    """``q**k`` as a rational function."""
    return RatFunc._raw(_ONE, k, _ONE)


def quantum_int(k: int) -> RatFunc:
    """
    The quantum integer ``[k]_q = (q**k - q**-k) / (q - q**-1)``.

    >>> quantum_int(2)
    RatFunc('q^-1 + q')
    >>> quantum_int(-2)
    RatFunc('-q^-1 - q')
    """
    if k == 0:
        return ZERO
    sign = 1 if k > 0 else -1
    k = abs(k)
    return sign * RatFunc(LaurentPoly({e: 1 for e in range(1 - k, k, 2)}))


def markov_weight(d: int) -> RatFunc:
    """``z_d = (1 - q**(-2d)) / (q - q**-1)``, equal to ``q**-d * [d]_q``."""
    return (1 - qpow(-2 * d)) / (Q - qpow(-1))


def eval_at(f: RatFunc, q0: Rational) -> Fraction:
    """
    Exact value of ``f`` at the rational point ``q0``.

    The caller is responsible for choosing a generic ``q0``; only a
    vanishing denominator (or ``q0 == 0``) is rejected.
    """
    f = as_ratfunc(f)
    q0 = Fraction(q0)
    if q0 == 0:
        raise EvaluationError("cannot evaluate a Laurent expression at q = 0")
    den = _frac(f._d(_fmpq(q0)))
    if den == 0:
        raise EvaluationError(f"denominator of {f} vanishes at q = {q0}")
    return _frac(f._n(_fmpq(q0))) * q0 ** f._s / den
