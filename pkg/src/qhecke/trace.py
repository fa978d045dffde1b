"""
Conditional expectations ``H_{m+1} -> H_m``, the Ocneanu trace and q-dimensions.

The conditional expectation with Markov weight ``z_d`` is the
``H_m``-bimodule map with

    Tr(X) = z_d X,    Tr(X T_{s_m} Y) = X Y      (X, Y in H_m).

Every basis word of ``S_{m+1}`` outside ``S_m`` factors as
``T_u T_{s_m} T_v`` with ``v = s_{m-1} ... s_k``, which is how it is computed.
Composing down to ``H_0`` gives the Ocneanu trace; its value on a primitive
idempotent depends only on the shape and matches the hook-content formula

    qdim(lam) = q^(-d |lam|) prod_nodes [d + content]_q / [hook]_q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .hecke import HeckeElement, RankError, basis, generator, inverse_generator, random_element
from .idempotents import (
    IdempotentRecord, addable_corners, extend_idempotent, records_by_level,
    spectral_projectors,
)
from .permutations import Permutation, coset_decompose, from_word, restrict
from .scalar import Q, RatFunc, markov_weight, quantum_int
from .tableaux import StandardTableau, YoungDiagram, enumerate_standard, hook_lengths

__all__ = [
    "TraceContext", "conditional_expectation", "ocneanu_trace", "qint",
    "qdim_closed", "qdim_via_trace", "QdimReport", "qdim_recurrence_check",
    "projector_trace_scalar", "projector_trace_check", "PowerSeries",
    "generating_series", "generating_identity_check", "scalar_multiple_of",
    "trace_axioms_check", "appendix_identities_check",
]


def qint(k: int, q=Q):
    """``[k]_q`` for a symbolic or rational ``q``."""
    if isinstance(q, RatFunc):
        return quantum_int(k)
    return (q ** k - q ** -k) / (q - 1 / q)


@dataclass(frozen=True)
class TraceContext:
    """The integer ``d`` fixing ``z_d = (1 - q^(-2d)) / (q - q^-1)``."""
    d: int
    q: object = Q

    @property
    def z(self):
        if isinstance(self.q, RatFunc):
            return markov_weight(self.d)
        q = Fraction(self.q)
        return (1 - q ** (-2 * self.d)) / (q - 1 / q)


@lru_cache(maxsize=None)
def _word_image(w: Permutation, q) -> HeckeElement:
    """``Tr(T_w)`` for ``w`` in ``S_{m+1}`` outside ``S_m``: ``T_u T_v``."""
    m = len(w) - 1
    u, k = coset_decompose(w, m)
    v = from_word(range(m - 1, k - 1, -1), m)
    return basis(u, q) * basis(v, q)


def conditional_expectation(x: HeckeElement, ctx: TraceContext) -> HeckeElement:
    """``Tr_{d(m+1)}: H_{m+1} -> H_m``, extended linearly from basis words."""
    if x.n < 1:
        raise RankError("conditional expectation needs rank >= 1")
    if x.q != ctx.q:
        raise RankError("trace context and element use different q")
    m = x.n - 1
    z = ctx.z
    out: dict = {}

    def add(w, c):
        s = out.get(w)
        s = c if s is None else s + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)

    for w, c in x.terms.items():
        if w[m] == m + 1:
            add(restrict(w, m), z * c)
        else:
            for v, cv in _word_image(w, x.q).terms.items():
                add(v, c * cv)
    return HeckeElement._make(m, out, x.q)


def trace_axioms_check(m: int, ctx: TraceContext, rng, trials: int = 3) -> dict[str, bool]:
    """
    The five defining properties of ``Tr_{d(m+1)}`` on random ``X, Y`` in ``H_m``
    and ``Z`` in ``H_{m+1}``.

    Keys: ``unit`` (``Tr X = z X``), ``bimodule`` (``Tr(XZY) = X Tr(Z) Y``),
    ``conjugation`` (``Tr(T^{+-1} X T^{-+1}) = Tr_{d(m)} X``, ``T = T_{s_m}``),
    ``markov`` (``Tr T = 1``) and ``cyclic``
    (``Tr_{d(m)} Tr(T Z) = Tr_{d(m)} Tr(Z T)``).
    """
    if m < 1:
        raise ValueError("the axioms need m >= 1")
    q = ctx.q
    n = m + 1
    sig, sig_inv = generator(m, n, q), inverse_generator(m, n, q)
    out = {"unit": True, "bimodule": True, "conjugation": True,
           "markov": conditional_expectation(sig, ctx) == HeckeElement.one(m, q),
           "cyclic": True}
    for _ in range(trials):
        x, y = random_element(m, rng, q), random_element(m, rng, q)
        z = random_element(n, rng, q)
        xp, yp = x.promote(n), y.promote(n)
        out["unit"] &= conditional_expectation(xp, ctx) == x.scale(ctx.z)
        out["bimodule"] &= conditional_expectation(xp * z * yp, ctx) == x * conditional_expectation(z, ctx) * y
        inner = conditional_expectation(x, ctx).promote(m)
        out["conjugation"] &= (conditional_expectation(sig * xp * sig_inv, ctx) == inner
                               and conditional_expectation(sig_inv * xp * sig, ctx) == inner)
        left = conditional_expectation(conditional_expectation(sig * z, ctx), ctx)
        right = conditional_expectation(conditional_expectation(z * sig, ctx), ctx)
        out["cyclic"] &= left == right
    return out


def appendix_identities_check(shape: YoungDiagram, m: int, t_samples, ctx: Optional[TraceContext] = None):
    """Resolvent and ``Z_m`` identities in the seminormal module of ``shape``."""
    from .seminormal import appendix_identities_check as check
    return check(shape, m, t_samples, ctx or TraceContext(1, Q))


def ocneanu_trace(x: HeckeElement, ctx: TraceContext):
    """Compose conditional expectations down to ``H_0``; returns a scalar."""
    while x.n > 0:
        x = conditional_expectation(x, ctx)
    return x.scalar_part()


def qdim_closed(shape: YoungDiagram, ctx: TraceContext):
    """``q^(-d|lam|) prod [d + col - row]_q / [hook]_q``."""
    q, d = ctx.q, ctx.d
    hooks = hook_lengths(shape)
    value = q ** (-d * shape.size)
    for (r, c), h in hooks.items():
        value = value * qint(d + c - r, q) / qint(h, q)
    return value


@dataclass
class QdimReport:
    shape: YoungDiagram
    d: int
    closed: object
    traces: dict[StandardTableau, object] = field(default_factory=dict)

    @property
    def all_equal(self) -> bool:
        return len(set(self.traces.values())) <= 1

    @property
    def equal(self) -> bool:
        return self.all_equal and all(v == self.closed for v in self.traces.values())

    @property
    def via_trace(self):
        return next(iter(self.traces.values()), None)


def qdim_via_trace(shape: YoungDiagram, ctx: TraceContext,
                   symbolic_limit: Optional[int] = None) -> QdimReport:
    """Ocneanu trace of the idempotent of every tableau of ``shape``."""
    records = records_by_level(shape.size, ctx.q, symbolic_limit)[shape.size]
    report = QdimReport(shape, ctx.d, qdim_closed(shape, ctx))
    for rec in records:
        if rec.shape == shape:
            report.traces[rec.tableau] = ocneanu_trace(rec.element, ctx)
    return report


def _hook_product(shape: YoungDiagram, q):
    out = 1
    for h in hook_lengths(shape).values():
        out = out * qint(h, q)
    return out


def projector_trace_scalar(shape: YoungDiagram, j: int, ctx: TraceContext):
    """
    ``q^-d [c_j + d]_q prod_lam [h]_q / prod_lam' [h]_q``.

    ``c_j`` is the content of the ``j``-th addable corner and ``lam'`` the
    enlarged diagram; this is the scalar by which the conditional expectation
    of the spectral projector ``P_j`` is a multiple of the parent idempotent.
    """
    q, d = ctx.q, ctx.d
    corner = addable_corners(shape)[j]
    bigger = shape.add((corner.row, corner.col))
    return (q ** -d * qint(corner.exponent + d, q)
            * _hook_product(shape, q) / _hook_product(bigger, q))


def qdim_recurrence_check(shape: YoungDiagram, j: int, ctx: TraceContext) -> bool:
    """``qdim(lam') == qdim(lam) * projector_trace_scalar(lam, j)`` in closed form."""
    corner = addable_corners(shape)[j]
    bigger = shape.add((corner.row, corner.col))
    return qdim_closed(bigger, ctx) == qdim_closed(shape, ctx) * projector_trace_scalar(shape, j, ctx)


def scalar_multiple_of(x: HeckeElement, e: HeckeElement):
    """The scalar ``s`` with ``x == s * e``, or None if there is none."""
    if e.is_zero():
        return None
    if x.is_zero():
        return 0 * e.scalar_part()
    w = next(iter(e.terms))
    s = x.coefficient(w) / e.terms[w]
    return s if x == e.scale(s) else None


def projector_trace_check(rec: IdempotentRecord, j: int, ctx: TraceContext) -> bool:
    """``Tr_{d(N+1)}(P_j) == e * projector_trace_scalar`` exactly."""
    p = extend_idempotent(rec, j).element
    lhs = conditional_expectation(p, ctx)
    return lhs == rec.element.scale(projector_trace_scalar(rec.shape, j, ctx))


# -- truncated power series in an auxiliary parameter -------------------------

class PowerSeries:
    """Power series in ``tau`` truncated after ``tau**order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int):
        cs = list(coeffs)[:order + 1]
        cs += [0] * (order + 1 - len(cs))
        self.coeffs, self.order = cs, order

    @classmethod
    def geometric(cls, a, order: int) -> PowerSeries:
        """``1 / (1 - a tau)``."""
        out, p = [], 1
        for _ in range(order + 1):
            out.append(p)
            p = p * a
        return cls(out, order)

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries([other], self.order)
        return PowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self.coeffs], self.order)
        out = [0] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return PowerSeries(out, self.order)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PowerSeries) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]})"


def generating_series(rec: IdempotentRecord, ctx: TraceContext, order: int):
    """
    Both sides of the resolvent generating identity on ``rec``, as series in ``tau``.

    Left: ``1 + (q-q^-1) Tr(y tau / (1 - y tau))`` with ``y = y_{N+1}``, written
    through the spectral projectors ``P_j`` (``y P_j = mu_j P_j``) and the
    exact conditional expectation of each ``P_j``.  Right:
    ``(1 - tau q^-2d)/(1 - tau) * prod_k (1 - tau a_k)^2 / ((1 - q^2 tau a_k)(1 - q^-2 tau a_k))``.
    Returns ``(lhs, rhs)``, or ``(None, rhs)`` if some ``Tr(P_j)`` is not a
    multiple of ``e``.
    """
    q = ctx.q
    h = q - 1 / q
    lhs = PowerSeries([1], order)
    for corner, p in spectral_projectors(rec):
        s = scalar_multiple_of(conditional_expectation(p, ctx), rec.element)
        if s is None:
            lhs = None
            break
        mu = q ** (2 * corner.exponent)
        tail = PowerSeries.geometric(mu, order)
        tail.coeffs[0] = 0
        lhs = lhs + tail * (h * s)
    rhs = PowerSeries([1, -q ** (-2 * ctx.d)], order) * PowerSeries.geometric(1, order)
    for m in rec.eigenvalues:
        a = q ** (2 * m)
        lin = PowerSeries([1, -a], order)
        rhs = rhs * lin * lin
        rhs = rhs * PowerSeries.geometric(q * q * a, order) * PowerSeries.geometric(a / (q * q), order)
    return lhs, rhs


def generating_identity_check(rec: IdempotentRecord, ctx: TraceContext, order: int) -> bool:
    if order < 1:
        raise ValueError("order must be at least 1")
    lhs, rhs = generating_series(rec, ctx, order)
    return lhs is not None and lhs == rhs
