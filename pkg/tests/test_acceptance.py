"""Acceptance gate.

Each test prints one ``[PASS]`` or ``[FAIL]`` line and the lines are
repeated in the pytest terminal summary.  ``python tests/test_acceptance.py``
runs the same checks without pytest.
"""

from __future__ import annotations

import io
import json
import random
import subprocess
import sys
import time
from fractions import Fraction
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from oracles import brute_min_crossings, g6_encode, kuratowski_planar, witness_ok  # noqa: E402
from planarch.bounds import BoundKind, Column, density_bound  # noqa: E402
from planarch.classes import GraphClass  # noqa: E402
from planarch.cli import main  # noqa: E402
from planarch.corpus import all_graphs  # noqa: E402
from planarch.extremal import generate_complete, generate_gn  # noqa: E402
from planarch.graph import emit_graph6, graph_from_edges, non_edges, parse_graph6  # noqa: E402
from planarch.planarity import Reason, is_planar  # noqa: E402
from planarch.variants import enumerate_configs, find_witness, is_member  # noqa: E402

IC, NIC, ONE = GraphClass.IC_PLANAR, GraphClass.NIC_PLANAR, GraphClass.ONE_PLANAR
ORACLE_NAME = {IC: "ic", NIC: "nic", ONE: "1planar"}
RESULTS: list[str] = []


def record(label: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


# -- 1 ----------------------------------------------------------------------------------


def test_ac1_verify_5_9():
    start = time.perf_counter()
    out = io.StringIO()
    code = main(["verify", "5", "9", "--json"], out, io.StringIO())
    elapsed = time.perf_counter() - start
    (rep,) = [json.loads(line) for line in out.getvalue().splitlines()]
    by_n = {r["n"]: r for r in rep["reports"]}
    g8 = generate_gn(8)
    missing = non_edges(g8)
    rejected = [e for e in missing if not is_member(g8.with_edge(*e), IC)]
    ok = (
        code == 0
        and rep["passed"]
        and sorted(by_n) == [5, 6, 7, 8, 9]
        and all(by_n[n]["edge_count"] == 3 * n - 5 and by_n[n]["is_ic"] and by_n[n]["is_maximal"] for n in by_n)
        and by_n[8]["edge_count"] == 19
        and len(missing) == 9 == len(rejected)
        and elapsed < 300
    )
    record("AC1 verify 5 9", ok, f"exit {code}, G_8 non-edges rejected {len(rejected)}/{len(missing)}, {elapsed:.1f}s")


# -- 2 ----------------------------------------------------------------------------------


def _shape(e: tuple[int, int], f: tuple[int, int], n: int) -> str:
    poles = {n - 2, n - 1}

    def side(x: tuple[int, int]) -> int:
        return len(set(x) & poles)  # 0 circle, 1 spoke, 2 pole edge

    s = sorted((side(e), side(f)))
    if s == [0, 2]:
        return "pq-circle"
    if s == [0, 0]:
        return "circle-circle"
    if s == [0, 1]:
        return "pole-circle"
    if s == [1, 1] and (set(e) & poles) != (set(f) & poles):
        return "vp-vq"
    return "other"


def test_ac2_case_analysis_census():
    details = []
    ok = True
    for n in (6, 7, 8):
        configs = enumerate_configs(generate_gn(n), IC)
        c = n - 2
        consecutive = {frozenset((i, (i + 1) % c)) for i in range(c)}
        shapes: dict[str, int] = {}
        good = len(configs) == n - 2
        for config in configs:
            if config.k != 1:
                good = False
            for pair in config.pairs:
                e, f = tuple(pair.e1), tuple(pair.e2)
                shape = _shape(e, f, n)
                shapes[shape] = shapes.get(shape, 0) + 1
                circle = e if set(f) == {n - 2, n - 1} else f
                if shape != "pq-circle" or frozenset(circle) not in consecutive:
                    good = False
        forbidden = sum(shapes.get(s, 0) for s in ("circle-circle", "pole-circle", "vp-vq"))
        good = good and forbidden == 0
        ok = ok and good
        details.append(f"n={n}: {len(configs)} configs, forbidden {forbidden}")
    record("AC2 case-analysis census", ok, "; ".join(details))


# -- 3 ----------------------------------------------------------------------------------


def _timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def test_ac3_small_graphs():
    k5, k6, k7 = (generate_complete(n) for n in (5, 6, 7))
    checks = [
        ("K5 IC", lambda: is_member(k5, IC), True),
        ("K6 not NIC", lambda: is_member(k6, NIC), False),
        ("K6 not NIC (exhaustive)", lambda: is_member(k6, NIC, fast_paths=False), False),
        ("K6 1-planar", lambda: is_member(k6, ONE), True),
        ("K7 not 1-planar", lambda: is_member(k7, ONE), False),
    ]
    ok = True
    parts = []
    for name, fn, want in checks:
        got, secs = _timed(fn)
        ok = ok and got == want and secs < 10
        parts.append(f"{name} {secs:.2f}s")
    edge_bound = 21 > 4 * 7 - 8 and is_planar(k7).reason is Reason.EDGE_BOUND
    record("AC3 K5/K6/K7 verdicts", ok and edge_bound, ", ".join(parts))


# -- 4 ----------------------------------------------------------------------------------


def test_ac4_density_formulas():
    U, UE, L, LE = BoundKind.UPPER, BoundKind.UPPER_EXAMPLE, BoundKind.LOWER, BoundKind.LOWER_EXAMPLE
    F = Fraction
    formulas = {
        (Column.ONE_PLANAR, U): lambda n: 4 * n - 8,
        (Column.ONE_PLANAR, UE): lambda n: 4 * n - 8,
        (Column.ONE_PLANAR, L): lambda n: F(20, 9) * n - F(10, 3),
        (Column.ONE_PLANAR, LE): lambda n: F(45, 17) * n - F(84, 17),
        (Column.NIC_PLANAR, U): lambda n: F(18, 5) * (n - 2),
        (Column.NIC_PLANAR, UE): lambda n: F(18, 5) * (n - 2),
        (Column.NIC_PLANAR, L): lambda n: F(16, 5) * (n - 2),
        (Column.NIC_PLANAR, LE): lambda n: F(16, 5) * (n - 2),
        (Column.IC_PLANAR, U): lambda n: F(13, 4) * n - 6,
        (Column.IC_PLANAR, UE): lambda n: F(13, 4) * n - 6,
        (Column.IC_PLANAR, L): lambda n: 3 * n - 5,
        (Column.IC_PLANAR, LE): lambda n: 3 * n - 5,
        (Column.OUTER_ONE_PLANAR, U): lambda n: F(5, 2) * n - 2,
        (Column.OUTER_ONE_PLANAR, UE): lambda n: F(5, 2) * n - 2,
        (Column.OUTER_ONE_PLANAR, L): lambda n: F(11, 5) * n - F(18, 5),
        (Column.OUTER_ONE_PLANAR, LE): lambda n: F(11, 5) * n - F(18, 5),
    }
    mismatches = 0
    for (column, kind), f in formulas.items():
        for n in range(5, 101):
            value = density_bound(column, kind, n)
            if not isinstance(value, Fraction) or value != f(n):
                mismatches += 1
    spots = (
        density_bound(IC, U, 8) == 20,
        density_bound(IC, L, 8) == 19,
        density_bound(NIC, U, 12) == 36,
        density_bound(ONE, U, 10) == 32,
    )
    record("AC4 density bounds", mismatches == 0 and all(spots), f"{mismatches} mismatches over n=5..100, spot values {sum(spots)}/4")


# -- 5 ----------------------------------------------------------------------------------


def test_ac5_oracle_equivalence():
    graphs = [g for n in range(0, 7) for g in all_graphs(n)]
    member_bad = planar_bad = 0
    for g in graphs:
        es = {frozenset(e) for e in g.edges}
        if is_planar(g).planar != kuratowski_planar(g.n, es):
            planar_bad += 1
        for cls in (IC, NIC, ONE):
            if is_member(g, cls) != (brute_min_crossings(g.n, es, ORACLE_NAME[cls]) is not None):
                member_bad += 1
    total = len(graphs)
    record(
        "AC5 oracle equivalence n<=6",
        member_bad == 0 and planar_bad == 0 and total == 209,
        f"{total} graphs, membership disagreements {member_bad}/{3 * total}, planarity disagreements {planar_bad}/{total}",
    )


# -- 6 ----------------------------------------------------------------------------------


def _random_graph(rng: random.Random, n_max: int) -> tuple[int, list[tuple[int, int]]]:
    n = rng.randint(1, n_max)
    p = rng.random()
    return n, [e for e in combinations(range(n), 2) if rng.random() < p]


def test_ac6_property_suites():
    rng = random.Random(20240601)
    chain_bad = witness_bad = prune_bad = positives = 0
    for _ in range(500):
        n, edges = _random_graph(rng, 8)
        g = graph_from_edges(n, edges)
        es = {frozenset(e) for e in edges}
        verdicts = [is_planar(g).planar] + [is_member(g, cls) for cls in (IC, NIC, ONE)]
        if any(a and not b for a, b in zip(verdicts, verdicts[1:])):
            chain_bad += 1
        for cls, member in zip((IC, NIC, ONE), verdicts[1:]):
            if not member:
                continue
            positives += 1
            w = find_witness(g, cls)
            if w is None or not witness_ok(
                n, es, ORACLE_NAME[cls], [(tuple(p.e1), tuple(p.e2)) for p in w.config.pairs],
                w.planarization.n, w.planarization.edges,
            ):
                witness_bad += 1
                continue
            if n >= 3 and w.k < max(0, g.m - 3 * n + 6):
                prune_bad += 1

    g6_bad = 0
    for _ in range(1000):
        n, edges = _random_graph(rng, 40)
        g = graph_from_edges(n, edges)
        code = emit_graph6(g)
        if code != g6_encode(n, {frozenset(e) for e in edges}) or parse_graph6(code) != g:
            g6_bad += 1

    ok = chain_bad == witness_bad == prune_bad == g6_bad == 0
    record(
        "AC6 property suites",
        ok,
        f"inclusion {chain_bad}/500, witness {witness_bad}/{positives}, prune {prune_bad}, graph6 {g6_bad}/1000 violations",
    )


# -- 7 ----------------------------------------------------------------------------------


def _strip_timing(text: str) -> list[dict]:
    recs = [json.loads(line) for line in text.splitlines()]
    for r in recs:
        r.pop("timing_ms")
    return recs


def test_ac7_deterministic_json():
    cmd = [sys.executable, "-m", "planarch", "verify", "5", "8", "--json"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=False)
    b = subprocess.run(cmd, capture_output=True, text=True, check=False)
    la, lb = a.stdout.splitlines(), b.stdout.splitlines()
    ok = a.returncode == b.returncode == 0 and _strip_timing(a.stdout) == _strip_timing(b.stdout)
    # any byte difference must sit inside the timing field
    differ = sum(x != y for x, y in zip(la, lb))
    record("AC7 determinism", ok and len(la) == len(lb) == 1, f"{differ} raw line(s) differ, identical after dropping timing_ms")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_ac")):
        try:
            fn()
        except AssertionError:
            failed += 1
    raise SystemExit(1 if failed else 0)
