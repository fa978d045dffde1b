"""
Command-line front end: ``qhecke <command> [options]``.

Output is canonical JSON (``"schema": 1``, sorted keys) or short text with
``--format text``.  Exit codes: 0 success, 1 a verification failed, 2 usage
error (bad flag, shape, expression or a rank above the symbolic limit).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .checks import check_names, run_checks
from .expr import ParseError, RunConfig, evaluate, parse, render
from .idempotents import SYMBOLIC_LIMIT, SymbolicLimitError, records_by_level, verify_resolution
from .scalar import RatFunc
from .seminormal import build_rep, relations_check
from .tableaux import (
    YoungDiagram, content_string, enumerate_standard, frobenius_dim, validate_string, young_graph,
)
from .trace import TraceContext, ocneanu_trace, qdim_closed, qdim_via_trace

SCHEMA = 1


class UsageError(Exception):
    pass


# -- helpers ---------------------------------------------------------------------

def sample_q_values(count: int, seed: int) -> tuple[Fraction, ...]:
    """``count`` distinct rationals strictly between 1 and 2 (never roots of unity)."""
    rng = random.Random(seed)
    out: list[Fraction] = []
    while len(out) < count:
        den = rng.randint(2, 40)
        q = Fraction(rng.randint(den + 1, 2 * den - 1), den)
        if q not in out:
            out.append(q)
    return tuple(out)


def _scalar(x) -> object:
    if isinstance(x, RatFunc):
        return x.to_json()
    return str(Fraction(x))


def _text(x) -> str:
    return str(x) if isinstance(x, RatFunc) else str(Fraction(x))


def _shape(text: str) -> YoungDiagram:
    try:
        return YoungDiagram.parse(text)
    except ValueError as exc:
        raise UsageError(f"invalid shape {text!r}: {exc}") from None


def _config(args, n: int) -> RunConfig:
    mode = getattr(args, "mode", "symbolic")
    q_values = sample_q_values(args.samples, args.seed) if mode == "evaluated" else ()
    try:
        return RunConfig(n=n, d=getattr(args, "d", 1), mode=mode, q_values=q_values,
                         fmt=args.format, order=getattr(args, "order", 6),
                         t_samples=tuple(getattr(args, "t_samples", (2, 3, 5, 7, 11))),
                         symbolic_limit=args.symbolic_limit)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, payload: dict, text_lines: Sequence[str]) -> None:
    if args.format == "json":
        payload = dict(payload, schema=SCHEMA)
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


# -- commands ----------------------------------------------------------------------

def cmd_tableaux(args) -> int:
    lam = _shape(args.shape)
    tabs = enumerate_standard(lam)
    rows = [{"tableau": t.to_list(), "content_string": list(content_string(t))} for t in tabs]
    _emit(args, {"shape": list(lam.rows), "count": len(tabs), "frobenius_dim": frobenius_dim(lam),
                 "tableaux": rows},
          [f"{t}  {','.join(map(str, content_string(t)))}" for t in tabs]
          + [f"count: {len(tabs)}"])
    return 0


def cmd_graph(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    graph = young_graph(args.n)
    if args.dot:
        sys.stdout.write(graph.to_dot())
        if args.figure:
            from .report import plot_young_graph
            plot_young_graph(graph, args.figure)
        return 0
    payload = graph.to_json()
    if args.figure:
        from .report import plot_young_graph
        payload["figure"] = str(plot_young_graph(graph, args.figure))
    lines = [f"{a} -> {b}  content {c}" for a, b, c in graph.edges]
    _emit(args, payload, lines)
    return 0


def cmd_validate(args) -> int:
    try:
        exps = tuple(int(p) for p in args.string.replace(" ", "").split(",") if p != "")
    except ValueError:
        raise UsageError(f"invalid string {args.string!r}; expected comma-separated integers") from None
    v = validate_string(exps)
    payload = {"string": list(exps), "ok": v.ok, "condition": v.condition, "index": v.index,
               "reason": v.reason}
    line = "ok" if v.ok else f"fail: condition ({v.condition}) at position {v.index}: {v.reason}"
    _emit(args, payload, [line])
    return 0


def cmd_idempotents(args) -> int:
    cfg = _config(args, args.n)
    qs = [cfg.q] if cfg.mode == "symbolic" else list(cfg.q_values)
    runs, ok, lines = [], True, []
    for q in qs:
        try:
            records = records_by_level(cfg.n, q, cfg.symbolic_limit)[cfg.n]
        except SymbolicLimitError as exc:
            raise UsageError(str(exc)) from None
        report = verify_resolution(records, pairwise=cfg.n <= SYMBOLIC_LIMIT)
        ok &= all(report.values())
        entry = {"q": "q" if isinstance(q, RatFunc) else str(q), "count": len(records),
                 "verification": report}
        if not args.summary:
            entry["records"] = [r.to_json() for r in records]
        runs.append(entry)
        lines.append(f"q = {entry['q']}: {len(records)} idempotents")
        if not args.summary:
            lines += [f"  {r.tableau}  {list(r.eigenvalues)}  {r.element}" for r in records]
        lines.append("  sum=1: {}, orthogonal: {}, idempotent: {}, eigenvalues: {}".format(
            *(str(report[k]).lower() for k in ("sum_is_one", "orthogonal", "idempotent", "eigenvalues"))))
    _emit(args, {"n": cfg.n, "mode": cfg.mode, "runs": runs, "passed": ok}, lines)
    return 0 if ok else 1


def cmd_qdim(args) -> int:
    lam = _shape(args.shape)
    ctx = TraceContext(args.d)
    closed = qdim_closed(lam, ctx)
    via, equal = None, None
    if args.check_trace:
        try:
            report = qdim_via_trace(lam, ctx, args.symbolic_limit)
        except SymbolicLimitError as exc:
            raise UsageError(str(exc)) from None
        via, equal = report.via_trace, report.equal
    payload = {"lambda": list(lam.rows), "d": args.d, "closed": _scalar(closed),
               "via_trace": None if via is None else _scalar(via), "equal": equal}
    lines = [f"qdim{lam} = {_text(closed)}"]
    if via is not None:
        lines.append(f"via trace: {_text(via)}  equal: {str(equal).lower()}")
    _emit(args, payload, lines)
    return 1 if equal is False else 0


def cmd_rep(args) -> int:
    lam = _shape(args.shape)
    rep = build_rep(lam)
    rel = relations_check(rep)
    payload = dict(rep.to_json(), dimension=rep.dim, relations=rel)
    lines = [f"shape {lam}, dimension {rep.dim}"]
    for i, m in enumerate(rep.gens, start=1):
        lines.append(f"T{i}:")
        lines += ["  [" + ", ".join(_text(x) for x in row) + "]" for row in m]
    lines.append("relations: " + ", ".join(f"{k}={str(v).lower()}" for k, v in sorted(rel.items())))
    _emit(args, payload, lines)
    return 0 if all(rel.values()) else 1


def cmd_trace(args) -> int:
    cfg = _config(args, args.n)
    try:
        ast = parse(args.expr, cfg.n)
    except ParseError as exc:
        raise UsageError(f"{exc}\n  {args.expr}\n  {' ' * exc.offset}^") from None
    qs = [cfg.q] if cfg.mode == "symbolic" else list(cfg.q_values)
    values = []
    for q in qs:
        try:
            x = evaluate(ast, cfg, q)
        except (ArithmeticError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        values.append((q, ocneanu_trace(x, TraceContext(cfg.d, q))))
    payload = {"expr": render(ast), "n": cfg.n, "d": cfg.d, "mode": cfg.mode,
               "traces": [{"q": "q" if isinstance(q, RatFunc) else str(q), "value": _scalar(v)}
                          for q, v in values]}
    lines = [f"Tr({render(ast)}) = {_text(v)}" + ("" if isinstance(q, RatFunc) else f"  at q = {q}")
             for q, v in values]
    _emit(args, payload, lines)
    return 0


def cmd_check(args) -> int:
    cfg = _config(args, args.n)
    only = args.only.split(",") if args.only else None
    try:
        results = run_checks(cfg, only=only, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    passed = all(r.passed for r in results)
    payload = {"n": cfg.n, "d": cfg.d, "mode": cfg.mode, "passed": passed,
               "results": [r.to_json() for r in results]}
    if cfg.mode == "evaluated":
        payload["q_values"] = [str(q) for q in cfg.q_values]
    if args.report_dir:
        from .report import write_report
        payload["report"] = write_report(results, args.report_dir)
    lines = []
    for r in results:
        if r.passed:
            lines.append(f"PASS {r.name}  ({r.seconds:.2f} s)")
        else:
            lines.append(f"FAIL {r.name}  ({r.seconds:.2f} s): {r.relation}; failing: {', '.join(r.failures)}")
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} passed")
    _emit(args, payload, lines)
    return 0 if passed else 1


# -- argument parsing --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qhecke", description=__doc__.strip().splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--symbolic-limit", type=int, default=SYMBOLIC_LIMIT,
                        help="largest rank computed with a symbolic q (default %(default)s)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled q values and random elements")
    modes = argparse.ArgumentParser(add_help=False)
    modes.add_argument("--mode", choices=("symbolic", "evaluated"), default="symbolic")
    modes.add_argument("--samples", type=int, default=3, help="number of rational q values in evaluated mode")

    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    s = sub.add_parser("tableaux", parents=[common], help="standard tableaux of a shape")
    s.add_argument("--shape", required=True, help="e.g. 3,2,1")
    s.set_defaults(func=cmd_tableaux)

    s = sub.add_parser("graph", parents=[common], help="coloured Young graph")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--dot", action="store_true", help="print Graphviz DOT instead of JSON")
    s.add_argument("--figure", metavar="PATH", help="also render the graph to an image file")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("validate", parents=[common], help="decide whether a string is a JM spectrum")
    s.add_argument("--string", required=True, help='e.g. "0,1,-1,0"')
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("idempotents", parents=[common, modes], help="primitive idempotents of H_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--summary", action="store_true", help="omit the elements themselves")
    s.set_defaults(func=cmd_idempotents)

    s = sub.add_parser("qdim", parents=[common], help="q-dimension of a shape")
    s.add_argument("--shape", required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--check-trace", action="store_true", help="compare with Ocneanu traces of idempotents")
    s.set_defaults(func=cmd_qdim)

    s = sub.add_parser("rep", parents=[common], help="seminormal representation matrices")
    s.add_argument("--shape", required=True)
    s.set_defaults(func=cmd_rep)

    s = sub.add_parser("trace", parents=[common, modes], help="Ocneanu trace of an expression")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--expr", required=True, help='e.g. "s1*s2 + q*y3"')
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("check", parents=[common, modes], help="run the invariant suite")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, default=1)
    s.add_argument("--order", type=int, default=6, help="tau-series order of the generating identity")
    s.add_argument("--t-samples", type=lambda x: [Fraction(v) for v in x.split(",")],
                   default=[2, 3, 5, 7, 11], help="t values for the resolvent identities")
    s.add_argument("--only", help="comma-separated subset of: " + ", ".join(check_names()))
    s.add_argument("--report-dir", metavar="DIR", help="write check.tsv and timings.png here")
    s.set_defaults(func=cmd_check)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qhecke {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
