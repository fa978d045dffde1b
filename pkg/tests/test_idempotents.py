from fractions import Fraction

import pytest
import sympy as sp

from oracles import element_to_naive, inversions, naive_equal, naive_multiply, q as sq, ratfunc_to_sympy
from qhecke.hecke import HeckeElement, generator, jucys_murphy
from qhecke.idempotents import (
    IdempotentRecord, SymbolicLimitError, addable_corners, branching_annihilator_check,
    extend_idempotent, prop3_check, records_by_level, resolution, root_record,
    spectral_projectors, verify_resolution,
)
from qhecke.permutations import from_word
from qhecke.scalar import Q
from qhecke.tableaux import all_tableaux, content_string

Q0 = Fraction(3, 2)


def test_root_record():
    rec = root_record()
    assert rec.n == 0 and rec.eigenvalues == ()
    assert rec.element == HeckeElement.one(0)


def test_level_one_is_unit():
    (rec,) = resolution(1)
    assert rec.element == HeckeElement.one(1)
    assert rec.eigenvalues == (0,)


def test_h2_idempotents_closed_form():
    # e_(0,1) = (q^-1 + T)/(q + q^-1) and e_(0,-1) = (q - T)/(q + q^-1)
    anti, sym = resolution(2)
    t = generator(1, 2)
    assert sym.element == (t + 1 / Q) / (Q + 1 / Q)
    assert anti.element == (-t + Q) / (Q + 1 / Q)
    assert str(sym.element) == "(1/(1 + q^2))*T[] + (q/(1 + q^2))*T[s1]"


def test_h2_idempotents_are_idempotent_under_naive_product():
    for rec in resolution(2):
        e = element_to_naive(rec.element)
        assert naive_equal(naive_multiply(e, e), e)


def test_h3_idempotents_under_naive_product():
    recs = resolution(3)
    naive = [element_to_naive(r.element) for r in recs]
    for a, ea in enumerate(naive):
        assert naive_equal(naive_multiply(ea, ea), ea)
        for b, eb in enumerate(naive):
            if a != b:
                assert naive_equal(naive_multiply(ea, eb), {})


def test_hook_symmetriser_h3_coefficients():
    # the row idempotent of H_3 is sum_w q^l(w) T_w / sum_w q^2l(w)
    (row,) = [r for r in resolution(3) if r.eigenvalues == (0, 1, 2)]
    norm = (1 + sq ** 2) * (1 + sq ** 2 + sq ** 4)
    assert len(row.element.terms) == 6
    for w, c in row.element.terms.items():
        want = sq ** inversions(w) / norm
        assert sp.cancel(ratfunc_to_sympy(c) - want) == 0


@pytest.mark.parametrize("n", range(1, 5))
def test_resolution_symbolic(n):
    recs = resolution(n)
    assert len(recs) == len(all_tableaux(n))
    assert [r.tableau for r in recs] == all_tableaux(n)
    assert all(verify_resolution(recs).values())


def test_resolution_evaluated():
    recs = resolution(4, Q0)
    assert all(verify_resolution(recs).values())
    assert all(verify_resolution(recs, pairwise=False).values())


def test_evaluation_commutes_with_construction():
    sym = resolution(4)
    ev = resolution(4, Q0)
    for a, b in zip(sym, ev):
        assert a.element.evaluate(Q0) == b.element


def test_verify_resolution_detects_missing_record():
    recs = resolution(3)
    out = verify_resolution(recs[1:])
    assert not out["sum_is_one"]


def test_verify_resolution_detects_wrong_eigenvalues():
    recs = resolution(3)
    bad = IdempotentRecord(recs[0].tableau, recs[0].element, recs[1].eigenvalues)
    out = verify_resolution([bad] + recs[1:], pairwise=False)
    assert not out["eigenvalues"]
    assert not out["orthogonal"]


def test_verify_resolution_detects_non_idempotent():
    recs = resolution(2)
    bad = IdempotentRecord(recs[0].tableau, recs[0].element.scale(2), recs[0].eigenvalues)
    assert not verify_resolution([bad, recs[1]])["idempotent"]


@pytest.mark.parametrize("n", range(0, 5))
def test_branching_annihilator(n):
    for rec in records_by_level(n)[n]:
        assert branching_annihilator_check(rec)


def test_branching_annihilator_is_not_vacuous():
    # dropping one factor leaves a nonzero product
    rec = resolution(2)[1]
    y = jucys_murphy(3, 3)
    x = rec.element.promote(3)
    corners = addable_corners(rec.shape)
    for c in corners[:-1]:
        x = x * y - x.scale(Q ** (2 * c.exponent))
    assert not x.is_zero()


@pytest.mark.parametrize("n", [1, 3])
def test_spectral_projectors_sum_to_parent(n):
    # at n = 1 the parent is 1 and the two projectors are the H_2 idempotents
    for rec in resolution(n):
        total = HeckeElement.zero(n + 1)
        for _, p in spectral_projectors(rec):
            total = total + p
        assert total == rec.element.promote(n + 1)


def test_extend_records_tableau():
    rec = extend_idempotent(resolution(2)[1], 1)
    assert rec.tableau.to_list() == [[1, 2], [3]]
    assert rec.eigenvalues == (0, 1, -1) == content_string(rec.tableau)
    with pytest.raises(IndexError):
        extend_idempotent(rec, 5)


@pytest.mark.parametrize("n", range(2, 5))
def test_blocks(n):
    assert all(prop3_check(r) for r in resolution(n))


def test_blocks_evaluated():
    assert all(prop3_check(r) for r in resolution(4, Q0))


def test_blocks_detect_a_bad_element():
    rec = resolution(3)[0]
    bad = IdempotentRecord(rec.tableau, rec.element + generator(1, 3), rec.eigenvalues)
    assert not prop3_check(bad)


def test_one_dimensional_actions():
    sym = [r for r in resolution(3) if r.eigenvalues == (0, 1, 2)][0].element
    anti = [r for r in resolution(3) if r.eigenvalues == (0, -1, -2)][0].element
    for i in (1, 2):
        assert generator(i, 3) * sym == sym.scale(Q)
        assert generator(i, 3) * anti == anti.scale(-1 / Q)


def test_symbolic_limit():
    with pytest.raises(SymbolicLimitError):
        resolution(6)
    with pytest.raises(SymbolicLimitError):
        resolution(3, symbolic_limit=2)


def test_json_form():
    obj = resolution(2)[1].to_json()
    assert obj["tableau"] == [[1, 2]]
    assert obj["eigenvalues"] == [0, 1]
    assert HeckeElement.from_json(obj["element"]) == resolution(2)[1].element


def test_element_has_full_support_at_n3():
    row = [r for r in resolution(3) if r.eigenvalues == (0, 1, 2)][0]
    assert row.element.coefficient(from_word([1, 2, 1], 3)) != 0
