import random
from fractions import Fraction

import pytest
import sympy as sp

from oracles import q as sq, qdim_oracle, ratfunc_to_sympy, same, z as z_oracle
from qhecke.hecke import HeckeElement, RankError, basis, generator, random_element
from qhecke.idempotents import addable_corners, records_by_level, resolution
from qhecke.permutations import from_word
from qhecke.scalar import Q, markov_weight
from qhecke.tableaux import YoungDiagram, partitions
from qhecke.trace import (
    PowerSeries, TraceContext, conditional_expectation, generating_identity_check,
    generating_series, ocneanu_trace, projector_trace_check, projector_trace_scalar,
    qdim_closed, qdim_recurrence_check, qdim_via_trace, scalar_multiple_of, trace_axioms_check,
)

H = Q - 1 / Q


@pytest.mark.parametrize("d", [1, 2, 3])
def test_markov_weight_matches_oracle(d):
    assert same(ratfunc_to_sympy(TraceContext(d).z), z_oracle(d))


def test_evaluated_markov_weight():
    ctx = TraceContext(2, Fraction(3, 2))
    assert ctx.z == markov_weight(2)(Fraction(3, 2))


def test_expectation_of_unit_and_generator():
    ctx = TraceContext(2)
    assert conditional_expectation(HeckeElement.one(3), ctx) == HeckeElement.one(2).scale(ctx.z)
    assert conditional_expectation(generator(2, 3), ctx) == HeckeElement.one(2)
    assert conditional_expectation(generator(1, 3), ctx) == generator(1, 2).scale(ctx.z)


def test_expectation_of_a_long_word():
    # T_{s2 s1 s2} = T_{s1} T_{s2} T_{s1} maps to T_{s1} T_{s1}
    ctx = TraceContext(1)
    w = basis(from_word([2, 1, 2], 3))
    assert conditional_expectation(w, ctx) == generator(1, 2) * generator(1, 2)


def test_hand_computed_traces():
    ctx = TraceContext(1)
    z = ctx.z
    assert ocneanu_trace(HeckeElement.one(3), ctx) == z ** 3
    assert ocneanu_trace(generator(1, 2), ctx) == z
    assert ocneanu_trace(generator(1, 2) ** 2, ctx) == z * z + H * z
    assert ocneanu_trace(generator(1, 3) * generator(2, 3), ctx) == z


def test_trace_is_central():
    rng = random.Random(7)
    ctx = TraceContext(2)
    for _ in range(3):
        a, b = random_element(3, rng), random_element(3, rng)
        assert ocneanu_trace(a * b, ctx) == ocneanu_trace(b * a, ctx)


def test_rank_errors():
    with pytest.raises(RankError):
        conditional_expectation(HeckeElement.one(0), TraceContext(1))
    with pytest.raises(RankError):
        conditional_expectation(HeckeElement.one(2), TraceContext(1, Fraction(2)))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_axioms_symbolic(m):
    out = trace_axioms_check(m, TraceContext(2), random.Random(m), trials=2)
    assert out == {"unit": True, "bimodule": True, "conjugation": True, "markov": True, "cyclic": True}


def test_axioms_evaluated():
    out = trace_axioms_check(3, TraceContext(1, Fraction(5, 4)), random.Random(0))
    assert all(out.values())


def test_unit_property_pins_the_weight():
    ctx = TraceContext(1)
    x = random_element(2, random.Random(3))
    good = conditional_expectation(x.promote(3), ctx)
    assert good == x.scale(ctx.z)
    assert good != x.scale(TraceContext(2).z)
    with pytest.raises(ValueError):
        trace_axioms_check(0, ctx, random.Random(0))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_qdim_closed_matches_oracle(d):
    for n in range(1, 6):
        for lam in partitions(n):
            got = ratfunc_to_sympy(qdim_closed(lam, TraceContext(d)))
            assert same(got, qdim_oracle(lam.rows, d))


def test_qdim_examples():
    assert str(qdim_closed(YoungDiagram((1,)), TraceContext(2))) == "q^-3 + q^-1"
    assert qdim_closed(YoungDiagram((1,)), TraceContext(3)) == markov_weight(3)
    assert qdim_closed(YoungDiagram((1, 1)), TraceContext(1)) == 0
    # d = 1 is the trivial representation of GL(1): only rows survive
    assert qdim_closed(YoungDiagram((3,)), TraceContext(1)) == Q ** -3


@pytest.mark.parametrize("d", [1, 2, 3])
def test_qdim_via_trace_small(d):
    ctx = TraceContext(d)
    for n in range(1, 5):
        for lam in partitions(n):
            rep = qdim_via_trace(lam, ctx)
            assert rep.all_equal and rep.equal
            assert len(rep.traces) >= 1


def test_single_box_is_markov_weight():
    rep = qdim_via_trace(YoungDiagram((1,)), TraceContext(2))
    assert rep.via_trace == markov_weight(2)


def test_qdim_via_trace_evaluated():
    q0 = Fraction(3, 2)
    ctx = TraceContext(2, q0)
    for lam in partitions(4):
        rep = qdim_via_trace(lam, ctx)
        assert rep.equal
        assert rep.closed == qdim_closed(lam, TraceContext(2))(q0)


def test_qdims_sum_to_z_power():
    # the trace of 1 = sum of idempotents
    ctx = TraceContext(3)
    total = 0
    for lam in partitions(4):
        total = total + qdim_closed(lam, ctx) * len([r for r in resolution(4) if r.shape == lam])
    assert total == ctx.z ** 4


@pytest.mark.parametrize("n", range(0, 4))
def test_projector_traces(n):
    for d in (1, 2, 3):
        ctx = TraceContext(d)
        for rec in records_by_level(n)[n]:
            for j in range(len(addable_corners(rec.shape))):
                assert projector_trace_check(rec, j, ctx)
                assert qdim_recurrence_check(rec.shape, j, ctx)


def test_projector_scalar_of_empty_shape_is_z():
    assert projector_trace_scalar(YoungDiagram(()), 0, TraceContext(2)) == markov_weight(2)


def test_projector_scalar_oracle():
    # lam = (1), adding (1,2): q^-d [1+d] [1] / ([2][1])
    d = 2
    got = ratfunc_to_sympy(projector_trace_scalar(YoungDiagram((1,)), 0, TraceContext(d)))
    qi = lambda k: (sq ** k - sq ** -k) / (sq - 1 / sq)
    assert same(got, sq ** -d * qi(1 + d) / qi(2))


def test_scalar_multiple_of():
    e = resolution(2)[1].element
    assert scalar_multiple_of(e.scale(Q), e) == Q
    assert scalar_multiple_of(generator(1, 2), e) is None
    assert scalar_multiple_of(e, HeckeElement.zero(2)) is None


def test_power_series():
    g = PowerSeries.geometric(2, 3)
    assert g.coeffs == [1, 2, 4, 8]
    assert (g * PowerSeries([1, -2], 3)).coeffs == [1, 0, 0, 0]
    assert (g + 1).coeffs == [2, 2, 4, 8]


@pytest.mark.parametrize("n", range(0, 4))
def test_generating_identity(n):
    ctx = TraceContext(2)
    for rec in records_by_level(n)[n]:
        assert generating_identity_check(rec, ctx, 6)


def test_generating_identity_root_record():
    # empty record: 1 + (q - q^-1) z tau/(1 - tau) = (1 - tau q^-2d)/(1 - tau)
    ctx = TraceContext(3)
    lhs, rhs = generating_series(records_by_level(0)[0][0], ctx, 4)
    assert lhs == rhs
    assert rhs.coeffs[1] == 1 - Q ** -6


def test_generating_identity_detects_wrong_d():
    rec = resolution(2)[1]
    lhs, _ = generating_series(rec, TraceContext(1), 4)
    _, rhs = generating_series(rec, TraceContext(2), 4)
    assert lhs != rhs
    with pytest.raises(ValueError):
        generating_identity_check(rec, TraceContext(1), 0)


def test_generating_identity_against_sympy_series():
    # the right side as a sympy series for the tableau [[1, 2]]
    tau = sp.Symbol("tau")
    d = 2
    expr = (1 - tau * sq ** (-2 * d)) / (1 - tau)
    for m in (0, 1):
        a = sq ** (2 * m)
        expr *= (1 - tau * a) ** 2 / ((1 - sq ** 2 * tau * a) * (1 - tau * a / sq ** 2))
    series = sp.series(expr, tau, 0, 4).removeO()
    _, rhs = generating_series(resolution(2)[1], TraceContext(d), 3)
    for k in range(4):
        c = rhs.coeffs[k]
        assert same(ratfunc_to_sympy(c) if hasattr(c, "to_json") else c, series.coeff(tau, k))
