from fractions import Fraction

import pytest

from qhecke.checks import CHECKS, check_names, run_checks
from qhecke.expr import RunConfig


def test_names_are_unique():
    assert len(set(check_names())) == len(CHECKS)


@pytest.mark.parametrize("d", [1, 3])
def test_full_suite_symbolic_n4(d):
    results = run_checks(RunConfig(n=4, d=d))
    assert [r.name for r in results] == check_names()
    assert all(r.passed for r in results), [r.to_json() for r in results if not r.passed]


def test_generic_suite_evaluated_n4():
    cfg = RunConfig(n=4, mode="evaluated", q_values=(Fraction(3, 2), Fraction(7, 5)))
    results = run_checks(cfg)
    generic = [c.name for c in CHECKS if c.generic]
    assert len(results) == 2 * len(generic)
    assert all(r.passed for r in results)


def test_unknown_check_name():
    with pytest.raises(ValueError):
        run_checks(RunConfig(n=2), only=["nope"])
