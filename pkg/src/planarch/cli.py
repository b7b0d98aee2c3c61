"""Command-line front end.

JSON mode prints one object per line (JSON Lines).  Every object carries a
``timing_ms`` field and nothing else in it depends on the clock, so runs on
the same input compare equal once that field is dropped.

Exit codes: 0 success/member/maximal, 1 non-member or not maximal,
2 usage or input error, 3 search budget exhausted.  With several inputs the
most severe outcome wins, in the order 2, 3, 1, 0.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Any, Callable, Iterator, TextIO

from .bounds import BoundKind, Column, density_bound
from .classes import GraphClass
from .errors import BudgetExceeded, PlanarchError
from .extremal import generate_complete, generate_cycle, generate_gn, is_maximal, verify_lemma
from .graph import Graph, emit_graph6, graph_from_edges, iter_graph6_lines, parse_graph6
from .planarity import is_planar
from .variants import (
    CrossingConfiguration,
    CrossingPair,
    SearchBudget,
    config_is_valid,
    enumerate_configs,
    exceeds_edge_ceiling,
    find_witness,
    is_member,
    planarize,
)

EXIT_OK, EXIT_NO, EXIT_ERROR, EXIT_BUDGET = 0, 1, 2, 3
_SEVERITY = {EXIT_OK: 0, EXIT_NO: 1, EXIT_BUDGET: 2, EXIT_ERROR: 3}

GENERATORS: dict[str, Callable[[int], Graph]] = {
    "gn": generate_gn,
    "complete": generate_complete,
    "cycle": generate_cycle,
}


def _worst(codes: list[int]) -> int:
    return max(codes, key=_SEVERITY.__getitem__, default=EXIT_OK)


def _ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000.0, 3)


def _budget(args: argparse.Namespace) -> SearchBudget:
    seconds = args.budget if args.budget and args.budget > 0 else None
    return SearchBudget(seconds)


def _graph_class(text: str) -> GraphClass:
    try:
        return GraphClass.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read_inputs(paths: list[str], stdin: TextIO) -> Iterator[str]:
    if not paths:
        yield from iter_graph6_lines(stdin)
        return
    for path in paths:
        if path == "-":
            yield from iter_graph6_lines(stdin)
        else:
            with open(path, encoding="ascii") as fh:
                yield from iter_graph6_lines(fh)


class _Emitter:
    def __init__(self, as_json: bool, out: TextIO) -> None:
        self.as_json = as_json
        self.out = out

    def emit(self, report: dict[str, Any], text: str) -> None:
        if self.as_json:
            self.out.write(json.dumps(report, separators=(",", ":")) + "\n")
        else:
            self.out.write(text + "\n")


def _pairs_text(config: list[list[list[int]]]) -> str:
    if not config:
        return "(no crossings)"
    return " ".join(f"{{{a},{b}}}x{{{c},{d}}}" for (a, b), (c, d) in config)


# -- commands -----------------------------------------------------------------


def cmd_gen(args: argparse.Namespace, em: _Emitter, err: TextIO) -> int:
    start = time.perf_counter()
    g = GENERATORS[args.family](args.n)
    code = emit_graph6(g)
    report = {"command": "gen", "family": args.family, "n": g.n, "m": g.m, "graph6": code}
    report["timing_ms"] = _ms(start)
    em.emit(report, code)
    return EXIT_OK


def _recheck(g: Graph, cls: GraphClass, config: list[list[list[int]]]) -> bool:
    """Rebuild a printed configuration from its lists and validate it afresh."""
    rebuilt = CrossingConfiguration(tuple(CrossingPair.of(a, b) for a, b in config), cls)
    if not config_is_valid(rebuilt, g, cls):
        return False
    return is_planar(planarize(g, rebuilt).planarization).planar


def _verdict_reason(g: Graph, cls: GraphClass) -> str:
    if cls is GraphClass.PLANAR:
        return is_planar(g).reason.value
    if g.n >= 4 and exceeds_edge_ceiling(g, cls):
        return "edge_bound"
    if is_planar(g).planar:
        return "planar"
    return "search"


def _check_one(code: str, cls: GraphClass, args: argparse.Namespace) -> tuple[dict[str, Any], int, str]:
    start = time.perf_counter()
    report: dict[str, Any] = {"command": "check", "class": cls.label, "input": code}
    try:
        g = parse_graph6(code)
    except PlanarchError as exc:
        report.update(complete=False, error=str(exc), timing_ms=_ms(start))
        return report, EXIT_ERROR, f"{code}  error: {exc}"
    report.update(n=g.n, m=g.m)
    budget = _budget(args)
    text = [code, cls.label]
    try:
        report["reason"] = _verdict_reason(g, cls)
        if args.witness or args.recheck:
            w = find_witness(g, cls, budget=budget)
            member = w is not None
        else:
            w = None
            member = is_member(g, cls, budget=budget)
        report["member"] = member
        text.append("member" if member else "non-member")
        if w is not None:
            cfg = w.config.as_lists()
            report["witness"] = {"k": w.k, "pairs": cfg}
            text.append(f"k={w.k} {_pairs_text(cfg)}")
            if args.recheck:
                report["recheck"] = _recheck(g, cls, cfg)
                text.append("recheck ok" if report["recheck"] else "recheck FAILED")
        if args.enumerate:
            configs = [c.as_lists() for c in enumerate_configs(g, cls, budget=budget)]
            report["census"] = {"count": len(configs), "configs": configs}
            text.append(f"configs={len(configs)}")
            if args.recheck:
                report["census"]["recheck"] = all(_recheck(g, cls, c) for c in configs)
    except BudgetExceeded as exc:
        report.update(complete=False, error=str(exc), timing_ms=_ms(start))
        text.append("budget exceeded")
        return report, EXIT_BUDGET, "  ".join(text)
    report["complete"] = True
    report["timing_ms"] = _ms(start)
    if args.recheck and (report.get("recheck") is False or report.get("census", {}).get("recheck") is False):
        return report, EXIT_ERROR, "  ".join(text)
    return report, EXIT_OK if report["member"] else EXIT_NO, "  ".join(text)


def cmd_check(args: argparse.Namespace, em: _Emitter, err: TextIO) -> int:
    codes = []
    for code in _read_inputs(args.inputs, sys.stdin):
        report, rc, text = _check_one(code, args.cls, args)
        em.emit(report, text)
        codes.append(rc)
    if not codes:
        err.write("planarch: no graph6 input\n")
        return EXIT_ERROR
    return _worst(codes)


def cmd_maximal(args: argparse.Namespace, em: _Emitter, err: TextIO) -> int:
    codes = []
    cls = args.cls
    for code in _read_inputs(args.inputs, sys.stdin):
        start = time.perf_counter()
        report: dict[str, Any] = {"command": "maximal", "class": cls.label, "input": code}
        try:
            g = parse_graph6(code)
            report.update(n=g.n, m=g.m)
            maximal, addable = is_maximal(g, cls, budget=_budget(args))
        except BudgetExceeded as exc:
            report.update(complete=False, error=str(exc), timing_ms=_ms(start))
            em.emit(report, f"{code}  budget exceeded")
            codes.append(EXIT_BUDGET)
            continue
        except PlanarchError as exc:
            report.update(complete=False, error=f"{type(exc).__name__}: {exc}", timing_ms=_ms(start))
            em.emit(report, f"{code}  error: {type(exc).__name__}: {exc}")
            codes.append(EXIT_ERROR)
            continue
        report.update(maximal=maximal, addable=[list(e) for e in addable], complete=True)
        report["timing_ms"] = _ms(start)
        if maximal:
            text = f"{code}  {cls.label}  maximal"
        else:
            text = f"{code}  {cls.label}  not maximal  addable: " + " ".join(str(e) for e in addable)
        em.emit(report, text)
        codes.append(EXIT_OK if maximal else EXIT_NO)
    if not codes:
        err.write("planarch: no graph6 input\n")
        return EXIT_ERROR
    return _worst(codes)


def _rational(x: Fraction) -> dict[str, Any]:
    return {"exact": str(x), "floor": x.numerator // x.denominator}


def bounds_table(n: int) -> dict[str, Any]:
    table = {}
    for column in Column:
        table[column.value] = {kind.value: _rational(density_bound(column, kind, n)) for kind in BoundKind}
    return table


def cmd_bounds(args: argparse.Namespace, em: _Emitter, err: TextIO) -> int:
    hi = args.n if args.n_max is None else args.n_max
    if hi < args.n:
        raise PlanarchError(f"empty range {args.n}..{hi}")
    for n in range(args.n, hi + 1):
        start = time.perf_counter()
        table = bounds_table(n)
        report = {"command": "bounds", "n": n, "bounds": table, "timing_ms": _ms(start)}
        lines = [f"n = {n}"]
        for column, row in table.items():
            cells = ", ".join(f"{k} {v['exact']} (floor {v['floor']})" for k, v in row.items())
            lines.append(f"  {column}: {cells}")
        em.emit(report, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, em: _Emitter, err: TextIO) -> int:
    start = time.perf_counter()
    budget = args.budget if args.budget and args.budget > 0 else None
    reports: list[dict[str, Any]] = []
    per_n: dict[str, float] = {}
    rc = EXIT_OK
    failed_n = None
    if args.n_min < 5 or args.n_max < args.n_min:
        verify_lemma(args.n_min, args.n_max)  # raises Unsupported, exit 2
    for n in range(args.n_min, args.n_max + 1):
        t = time.perf_counter()
        try:
            (rep,) = verify_lemma(n, n, budget=budget)
        except BudgetExceeded as exc:
            failed_n = exc.n
            rc = EXIT_BUDGET
            break
        per_n[str(n)] = _ms(t)
        reports.append(rep.to_dict())
    passed = rc == EXIT_OK and all(r["passed"] for r in reports)
    if rc == EXIT_OK and not passed:
        rc = EXIT_NO
    out: dict[str, Any] = {
        "command": "verify",
        "n_min": args.n_min,
        "n_max": args.n_max,
        "budget_s": budget,
        "complete": failed_n is None,
        "budget_exceeded_at": failed_n,
        "passed": passed,
        "reports": reports,
        "timing_ms": {"total": _ms(start), "per_n": per_n},
    }
    lines = []
    for r in reports:
        status = "PASS" if r["passed"] else "FAIL"
        census = r["census"]["count"]
        lines.append(
            f"n={r['n']:<3} edges {r['edge_count']}/{r['expected']}  ic={r['is_ic']}  "
            f"maximal={r['is_maximal']}  configs={census}  {status}"
        )
    if failed_n is not None:
        lines.append(f"n={failed_n:<3} budget exceeded")
    lines.append("all checks passed" if passed else "verification FAILED")
    em.emit(out, "\n".join(lines))
    return rc


def _parse_edge_record(line: str) -> Graph:
    try:
        data = json.loads(line)
        return graph_from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
    except (ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, PlanarchError):
            raise
        raise PlanarchError(f"bad edge-list record: {exc}") from None


def cmd_convert(args: argparse.Namespace, em: _Emitter, err: TextIO) -> int:
    """graph6 lines become edge-list records and vice versa."""
    codes = []
    for line in _read_inputs(args.inputs, sys.stdin):
        start = time.perf_counter()
        try:
            g = _parse_edge_record(line) if line.startswith("{") else parse_graph6(line)
        except PlanarchError as exc:
            err.write(f"planarch: {exc}\n")
            codes.append(EXIT_ERROR)
            continue
        target = args.to or ("graph6" if line.startswith("{") else "edges")
        code = emit_graph6(g)
        record = {"n": g.n, "edges": [list(e) for e in g.edges]}
        report = {"command": "convert", "graph6": code, **record, "timing_ms": _ms(start)}
        text = code if target == "graph6" else json.dumps(record, separators=(",", ":"))
        em.emit(report, text)
        codes.append(EXIT_OK)
    return _worst(codes)


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON Lines instead of text")
    common.add_argument(
        "--budget", type=float, default=60.0, metavar="N",
        help="wall-clock seconds per graph (per n for verify); 0 disables the limit",
    )

    ap = argparse.ArgumentParser(prog="planarch", description="Beyond-planarity recognition and density checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="print a generated graph as graph6")
    p.add_argument("family", choices=sorted(GENERATORS))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_gen)

    for name, func, helptext in (
        ("check", cmd_check, "decide class membership"),
        ("maximal", cmd_maximal, "list edges that can be added without leaving the class"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("cls", type=_graph_class, metavar="CLASS", help="planar, ic, nic or 1planar")
        p.add_argument("inputs", nargs="*", metavar="FILE", help="graph6 files; standard input if none")
        if name == "check":
            p.add_argument("--witness", action="store_true", help="report a minimum crossing configuration")
            p.add_argument("--enumerate", action="store_true", help="report every valid configuration")
            p.add_argument("--recheck", action="store_true", help="re-validate printed configurations")
        p.set_defaults(func=func)

    p = sub.add_parser("bounds", parents=[common], help="tabulated density bounds at n or over a range")
    p.add_argument("n", type=int)
    p.add_argument("n_max", type=int, nargs="?")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[common], help="verify sparsity and maximality of G_n")
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", parents=[common], help="convert between graph6 and JSON edge lists")
    p.add_argument("inputs", nargs="*", metavar="FILE")
    p.add_argument("--to", choices=("graph6", "edges"), help="output format (default: the other one)")
    p.set_defaults(func=cmd_convert)
    return ap


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    em = _Emitter(args.json, out)
    try:
        return args.func(args, em, err)
    except (PlanarchError, OSError) as exc:
        err.write(f"planarch: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
