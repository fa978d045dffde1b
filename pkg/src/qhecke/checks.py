"""
The invariant suite behind ``qhecke check``.

Every check is named after the relation it verifies and returns either a
bool or a dict of named bools.  ``run_checks`` times each one.

>>> results = run_checks(RunConfig(n=2, d=1), only=["hecke.quadratic", "trace.markov_unit"])
>>> [(r.name, r.passed) for r in results]
[('hecke.quadratic', True), ('trace.markov_unit', True)]
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import hecke as hk
from .expr import RunConfig
from .hecke import HeckeElement, commutator, generator, intertwiner, jucys_murphy
from .idempotents import (
    addable_corners, branching_annihilator_check, prop3_check, records_by_level,
    verify_resolution,
)
from .permutations import all_perms
from .seminormal import (
    appendix_identities_check, build_rep, idempotent_image_check,
    markov_decomposition_check, relations_check, rep_dimension_audit,
)
from .tableaux import all_tableaux, bijections, candidate_strings, content_string, partitions, validate_string
from .trace import (
    TraceContext, generating_identity_check, ocneanu_trace, projector_trace_check,
    qdim_recurrence_check, qdim_via_trace, trace_axioms_check,
)

__all__ = ["CheckResult", "Check", "CHECKS", "run_checks", "check_names"]


@dataclass
class CheckResult:
    name: str
    relation: str
    passed: bool
    seconds: float
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "relation": self.relation, "passed": self.passed,
                "seconds": round(self.seconds, 3), "failures": self.failures}


@dataclass(frozen=True)
class Check:
    name: str
    relation: str
    run: Callable[["_Env"], object]
    generic: bool = False          # meaningful at a rational q as well


@dataclass
class _Env:
    n: int
    d: int
    q: object
    order: int
    t_samples: tuple
    rng: random.Random

    @property
    def ctx(self) -> TraceContext:
        return TraceContext(self.d, self.q)


# -- individual checks ---------------------------------------------------------

def _hecke_quadratic(e: _Env):
    h = e.q - 1 / e.q
    return all(generator(i, e.n, e.q) ** 2 == 1 + generator(i, e.n, e.q).scale(h)
               for i in range(1, e.n))


def _hecke_braid(e: _Env):
    g = lambda i: generator(i, e.n, e.q)
    return all(g(i) * g(i + 1) * g(i) == g(i + 1) * g(i) * g(i + 1) for i in range(1, e.n - 1))


def _hecke_far(e: _Env):
    g = lambda i: generator(i, e.n, e.q)
    return all(commutator(g(i), g(j)).is_zero()
               for i in range(1, e.n) for j in range(i + 2, e.n))


def _hecke_associative(e: _Env):
    a, b, c = (hk.random_element(e.n, e.rng, e.q) for _ in range(3))
    return (a * b) * c == a * (b * c)


def _shuffle(e: _Env):
    s = hk.shuffle(e.n, e.q)
    return len(s.terms) == len(all_perms(e.n)) and all(c == 1 for c in s.terms.values())


def _jm_forms(e: _Env):
    return all(jucys_murphy(i, e.n, e.q) == hk.jucys_murphy_sum_form(i, e.n, e.q)
               for i in range(1, e.n + 1))


def _jm_commute(e: _Env):
    ys = [jucys_murphy(i, e.n, e.q) for i in range(1, e.n + 1)]
    return all(commutator(ys[i], ys[j]).is_zero()
               for i in range(e.n) for j in range(i + 1, e.n))


def _center(e: _Env):
    ys = [jucys_murphy(i, e.n, e.q) for i in range(1, e.n + 1)]
    total, prod = HeckeElement.zero(e.n, e.q), HeckeElement.one(e.n, e.q)
    for y in ys[1:]:
        total, prod = total + y, prod * y
    out = {"sum": True, "product": True}
    for k in range(1, e.n):
        s = generator(k, e.n, e.q)
        out["sum"] &= commutator(s, total).is_zero()
        out["product"] &= commutator(s, prod).is_zero()
    return out


def _intertwiners(e: _Env):
    n, q = e.n, e.q
    y = lambda i: jucys_murphy(i, n, q)
    out = {"exchange": True, "square": True, "braid": True}
    for m in range(1, n):
        u = intertwiner(m, n, q)
        out["exchange"] &= u * y(m) == y(m + 1) * u and u * y(m + 1) == y(m) * u
        out["exchange"] &= all(commutator(u, y(k)).is_zero()
                               for k in range(1, n + 1) if k not in (m, m + 1))
        rhs = (y(m).scale(q) - y(m + 1).scale(1 / q)) * (y(m + 1).scale(q) - y(m).scale(1 / q))
        out["square"] &= u * u == rhs
    for m in range(1, n - 1):
        a, b = intertwiner(m, n, q), intertwiner(m + 1, n, q)
        out["braid"] &= a * b * a == b * a * b
    return out


def _spectrum_strings(e: _Env):
    expected = {content_string(t) for t in all_tableaux(e.n)}
    accepted = {s for s in candidate_strings(e.n) if validate_string(s).ok}
    return accepted == expected


def _bijections(e: _Env):
    return bijections(e.n).check()


def _resolution(e: _Env):
    # all pairwise products at a symbolic q; at a rational q orthogonality is derived
    symbolic = not isinstance(e.q, Fraction)
    return verify_resolution(records_by_level(e.n, e.q)[e.n], pairwise=symbolic)


def _branching(e: _Env):
    return all(branching_annihilator_check(r)
               for level in records_by_level(e.n - 1, e.q) for r in level)


def _prop3(e: _Env):
    return all(prop3_check(r) for r in records_by_level(e.n, e.q)[e.n])


def _trace_axioms(e: _Env):
    out = {}
    for m in range(1, e.n):
        for k, v in trace_axioms_check(m, e.ctx, e.rng).items():
            out[k] = out.get(k, True) and v
    return out or True


def _markov_unit(e: _Env):
    return ocneanu_trace(HeckeElement.one(e.n, e.q), e.ctx) == e.ctx.z ** e.n


def _qdim(e: _Env):
    out = {}
    for k in range(1, e.n + 1):
        for lam in partitions(k):
            rep = qdim_via_trace(lam, e.ctx)
            out[f"qdim{lam}"] = rep.equal
    return out


def _projector_traces(e: _Env):
    out = {"projector": True, "recurrence": True}
    for level in records_by_level(e.n - 1, e.q):
        for rec in level:
            for j in range(len(addable_corners(rec.shape))):
                out["projector"] &= projector_trace_check(rec, j, e.ctx)
                out["recurrence"] &= qdim_recurrence_check(rec.shape, j, e.ctx)
    return out


def _generating(e: _Env):
    return all(generating_identity_check(rec, e.ctx, e.order)
               for level in records_by_level(e.n - 1, e.q) for rec in level)


def _resolvents(e: _Env):
    out = {}
    for k in range(2, e.n + 1):
        for lam in partitions(k):
            for m in range(1, k):
                out[f"{lam} m={m}"] = appendix_identities_check(lam, m, e.t_samples, e.ctx)
    return out or True


def _rep_relations(e: _Env):
    out = {}
    for lam in partitions(e.n):
        for k, v in relations_check(build_rep(lam, e.q)).items():
            out[k] = out.get(k, True) and v
    return out


def _rep_dimensions(e: _Env):
    return rep_dimension_audit(e.n)


def _rep_idempotents(e: _Env):
    return idempotent_image_check(e.n, e.q)


def _rep_markov(e: _Env):
    return markov_decomposition_check(hk.random_element(e.n, e.rng, e.q), e.ctx)


CHECKS: list[Check] = [
    Check("hecke.quadratic", "quadratic relation T_i^2 = 1 + (q - q^-1) T_i", _hecke_quadratic, True),
    Check("hecke.braid", "braid relation T_i T_i+1 T_i = T_i+1 T_i T_i+1", _hecke_braid, True),
    Check("hecke.far_commutation", "far commutation T_i T_j = T_j T_i for |i - j| > 1", _hecke_far, True),
    Check("hecke.associativity", "associativity of the product on random elements", _hecke_associative, True),
    Check("hecke.shuffle", "shuffle element is the sum of all basis words", _shuffle, True),
    Check("jm.forms", "recursive and sum forms of the Jucys-Murphy elements agree", _jm_forms, True),
    Check("jm.commute", "Jucys-Murphy elements commute pairwise", _jm_commute, True),
    Check("jm.center", "sum and product of y_2..y_n are central", _center, True),
    Check("intertwiners", "intertwiner exchange, square and braid relations", _intertwiners, True),
    Check("tableaux.spectrum", "spectrum conditions accept exactly the content strings", _spectrum_strings, True),
    Check("tableaux.bijections", "tableaux, strings and graph paths correspond", _bijections, True),
    Check("idempotents.resolution", "complete orthogonal idempotents with JM eigenvalues", _resolution, True),
    Check("idempotents.branching", "branching annihilator of y_{N+1} on each idempotent", _branching, True),
    Check("idempotents.blocks", "one- and two-dimensional generator action on idempotents", _prop3, True),
    Check("trace.axioms", "defining properties of the conditional expectation", _trace_axioms),
    Check("trace.markov_unit", "Ocneanu trace of the unit is z_d^n", _markov_unit),
    Check("trace.qdim", "Ocneanu trace of every idempotent equals the hook-content q-dimension", _qdim),
    Check("trace.projectors", "conditional expectation of spectral projectors and the q-dimension recurrence",
          _projector_traces),
    Check("trace.generating", "resolvent generating identity as a series in tau", _generating),
    Check("trace.resolvents", "resolvent identities and the Z_m recurrence in seminormal modules", _resolvents),
    Check("rep.relations", "seminormal matrices satisfy the defining relations", _rep_relations, True),
    Check("rep.dimensions", "module dimensions are hook-length counts summing to n!", _rep_dimensions, True),
    Check("rep.idempotents", "idempotents act as diagonal matrix units", _rep_idempotents),
    Check("rep.markov", "q-dimension weighted matrix traces give the Ocneanu trace", _rep_markov),
]


def check_names() -> list[str]:
    return [c.name for c in CHECKS]


def _evaluate_check(check: Check, env: _Env, label: str) -> CheckResult:
    start = time.perf_counter()
    value = check.run(env)
    seconds = time.perf_counter() - start
    if isinstance(value, dict):
        failures = sorted(k for k, v in value.items() if not v)
    else:
        failures = [] if value else [check.name]
    return CheckResult(label, check.relation, not failures, seconds, failures)


def run_checks(cfg: RunConfig, only: Optional[list[str]] = None, seed: int = 0) -> list[CheckResult]:
    """
    Run the suite on ``H_n``.

    In evaluated mode only the checks that make sense at a rational ``q`` run,
    once per value, labelled ``name@q=value``.
    """
    unknown = set(only or ()) - set(check_names())
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
    selected = [c for c in CHECKS if only is None or c.name in only]
    out = []
    if cfg.mode == "symbolic":
        env = _Env(cfg.n, cfg.d, cfg.q, cfg.order, cfg.t_samples, random.Random(seed))
        for c in selected:
            out.append(_evaluate_check(c, env, c.name))
        return out
    for q0 in cfg.q_values:
        env = _Env(cfg.n, cfg.d, q0, cfg.order, cfg.t_samples, random.Random(seed))
        for c in selected:
            if c.generic:
                out.append(_evaluate_check(c, env, f"{c.name}@q={q0}"))
    return out
