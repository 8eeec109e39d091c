"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Time limits are asserted alongside the values. The lines are repeated in the
"acceptance criteria" section of the pytest summary.
"""

from __future__ import annotations

import io
import random
import time
from collections import Counter

import pytest

from skewcert.certify import (
    CycleType,
    EdgeWeighting,
    classify_cycle,
    counting_bound,
    cycle_templates,
    cycle_weight,
    enumerate_min_cycles,
    face_weight_audit,
    paper_weighting_p,
    paper_weighting_q,
    template_type_ii,
    template_type_iii,
    type_i_face_count,
    weighted_girth,
)
from skewcert.families import expected_degree_two, h_deletion_set, petersen, q3_reduction, q_graph
from skewcert.graph import (
    complete_bipartite,
    complete_graph,
    delete_edges,
    random_connected_graph,
    random_graph,
)
from skewcert.planarity import embed, is_planar
from skewcert.cli import run
from skewcert.solver import skewness_bruteforce, skewness_exact

Q_GRID = [(s, k) for s in range(3, 9) for k in range(4, 13)]


def formula(s: int, k: int) -> int:
    return -(-(s - 2) * k // 2) + 1


def timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


def test_criterion_01_exact_solver_oracles(record_criterion):
    named = [
        ("K5", complete_graph(5), 1),
        ("K3,3", complete_bipartite(3, 3), 1),
        ("P(5,2)", petersen(5, 2), 2),
    ]
    problems = []
    for name, g, want in named:
        r, dt = timed(lambda g=g: skewness_exact(g))
        if r.value != want or dt >= 1.0:
            problems.append(f"{name}={r.value} in {dt:.2f}s")
    brute_p = skewness_bruteforce(petersen(5, 2)).value
    if brute_p != 2:
        problems.append(f"brute force P(5,2)={brute_p}")
    k6, dt = timed(lambda: skewness_exact(complete_graph(6)))
    k6_brute = skewness_bruteforce(complete_graph(6)).value
    if k6.value != k6_brute or dt >= 1.0:
        problems.append(f"K6 exact {k6.value} vs brute force {k6_brute}")

    rng = random.Random(2024)
    mismatches = 0
    t0 = time.perf_counter()
    for _ in range(500):
        n = rng.randint(5, 8)
        g = random_graph(n, rng.randint(9, min(14, n * (n - 1) // 2)), rng)
        e, b = skewness_exact(g), skewness_bruteforce(g)
        if (e.value, e.deletion_set) != (b.value, b.deletion_set):
            mismatches += 1
    total = time.perf_counter() - t0
    if mismatches or total >= 300:
        problems.append(f"{mismatches} random mismatches in {total:.1f}s")
    detail = (
        f"K5=1, K3,3=1, P(5,2)=2, K6={k6.value} (= brute force; the K6 -> 2 item is reported "
        f"separately), 500 random graphs exact = brute force in {total:.1f}s"
    )
    record_criterion(1, "exact-solver oracle suite", not problems, "; ".join(problems) or detail)
    assert not problems


@pytest.mark.xfail(strict=True, reason=(
    "K6 has 15 edges while a planar graph on 6 vertices has at most 12, so at least 3 "
    "deletions are needed; brute force confirms 3. The listed value 2 cannot be met."
))
def test_criterion_01_k6_listed_value(record_criterion):
    value = skewness_exact(complete_graph(6)).value
    record_criterion(
        1, "K6 -> 2 as listed", value == 2,
        f"computed {value}; 15 edges > 3*6-6 = 12 forces >= 3 and brute force gives 3",
    )
    assert value == 2


def test_criterion_02_rim_hub_small_grid(record_criterion):
    rows = []
    ok = True
    for s, k in [(3, 4), (3, 5), (3, 6), (4, 4)]:
        r, dt = timed(lambda s=s, k=k: skewness_exact(q_graph(s, k)))
        good = r.value == formula(s, k) and dt < 600
        ok &= good
        rows.append(f"Q_{s}({k})={r.value} ({dt:.1f}s)")
    record_criterion(2, "exact skewness of Q_s(k) = ceil((s-2)k/2)+1", ok, ", ".join(rows))
    assert ok


@pytest.mark.slow
def test_criterion_02_stretch_q54(record_criterion):
    r, dt = timed(lambda: skewness_exact(q_graph(5, 4)))
    print(f"criterion  2 stretch  Q_5(4)={r.value} in {dt:.1f}s (non-blocking)")
    assert r.value == 7


def test_criterion_03_certificate_grid(record_criterion):
    t0 = time.perf_counter()
    bad = []
    for s, k in Q_GRID:
        w = paper_weighting_q(s, k)
        girth = weighted_girth(w).weight
        bound = counting_bound(w).bound
        if girth != 4 * k - 4 or bound != formula(s, k):
            bad.append((s, k, girth, bound))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 30
    record_criterion(3, "weighted girth 4k-4 and counting bound on s 3..8, k 4..12", ok,
                     f"{len(Q_GRID) - len(bad)}/{len(Q_GRID)} in {dt:.1f}s")
    assert ok, bad


def test_criterion_04_construction_grid(record_criterion):
    t0 = time.perf_counter()
    bad = []
    for s, k in Q_GRID:
        deleted = h_deletion_set(s, k)
        t = len(deleted)
        h = delete_edges(q_graph(s, k), deleted)
        if t != formula(s, k) or not is_planar(h):
            bad.append((s, k))
            continue
        emb = embed(h)
        if emb.face_count != s * k - k - t + 2 or len(emb.faces) != emb.face_count:
            bad.append((s, k))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 30
    record_criterion(4, "deletion set size, planar residual, sk-k-t+2 faces", ok,
                     f"{len(Q_GRID) - len(bad)}/{len(Q_GRID)} in {dt:.1f}s")
    assert ok, bad


def test_criterion_05_petersen_certificate(record_criterion):
    t0 = time.perf_counter()
    rows = []
    ok = True
    for k in (9, 11, 13):
        cert = counting_bound(paper_weighting_p(k))
        good = (
            cert.total_weight == 4 * k * (3 * k - 1)
            and cert.weighted_girth == 8 * k - 8
            and cert.bound == k + 1
        )
        ok &= good
        rows.append(f"k={k}: W={cert.total_weight} g={cert.weighted_girth} bound={cert.bound}")
    dt = time.perf_counter() - t0
    ok &= dt < 60
    record_criterion(5, "P(4k,k) certificate", ok, "; ".join(rows) + f" ({dt:.2f}s)")
    assert ok


def test_criterion_06_cycle_classification(record_criterion):
    k = 9
    n = 4 * k
    t0 = time.perf_counter()
    # brute-force confirmation that type (iii) is type (ii) re-indexed
    ii = {template_type_ii(k, i) for i in range(n)}
    iii = {template_type_iii(k, i) for i in range(n)}
    identified = ii == iii and all(template_type_iii(k, i) == template_type_ii(k, i - k) for i in range(n))

    w = paper_weighting_p(k)
    cycles = enumerate_min_cycles(w, 64)
    templates = cycle_templates(k)
    kinds = Counter(classify_cycle(c, k, templates).kind for c in cycles)
    below = [c for c in cycles if cycle_weight(c, w) < 64]
    dt = time.perf_counter() - t0
    ok = (
        identified
        and len(cycles) == 81
        and kinds[CycleType.OTHER] == 0
        and not below
        and not enumerate_min_cycles(w, 63)
        and dt < 600
    )
    record_criterion(6, "minimum-weight cycles of P(36,9)", ok,
                     f"ii=iii confirmed: {identified}; {len(cycles)} cycles, "
                     f"I={kinds[CycleType.TYPE_I]} II/III={kinds[CycleType.TYPE_II_III]} "
                     f"IV={kinds[CycleType.TYPE_IV]} other={kinds[CycleType.OTHER]}, "
                     f"{len(below)} below 64 ({dt:.2f}s)")
    assert ok


def test_criterion_07_face_audit(record_criterion):
    bad = []
    for s, k in Q_GRID:
        h = delete_edges(q_graph(s, k), h_deletion_set(s, k))
        audit = face_weight_audit(embed(h), paper_weighting_q(s, k).restrict(h))
        if audit.face_total != 2 * audit.edge_total:
            bad.append((s, k))
    xs = {k: type_i_face_count(k) for k in (9, 11, 13)}
    ok = not bad and all(x == 2 for x in xs.values())
    record_criterion(7, "face-weight identity on all residuals; x = 2", ok,
                     f"identity {len(Q_GRID) - len(bad)}/{len(Q_GRID)}; x = {sorted(str(x) for x in set(xs.values()))}")
    assert ok


def test_criterion_08_reduction(record_criterion):
    t0 = time.perf_counter()
    rows = []
    ok = True
    for k in (5, 7, 9, 11):
        red = q3_reduction(k)
        listed = set(red.degree_two) == set(expected_degree_two(k)) and red.degree_two_matches
        good = red.isomorphic and listed and red.rim_cycle_mapping_ok
        ok &= good
        rows.append(f"k={k}:{'ok' if good else 'bad'}")
    dt = time.perf_counter() - t0
    ok &= dt < 60
    record_criterion(8, "J reduces to a subdivision of Q_3(k)", ok, ", ".join(rows) + f" ({dt:.2f}s)")
    assert ok


def test_criterion_09_soundness(record_criterion):
    instances: list[tuple[str, EdgeWeighting]] = []
    for name, g in [
        ("K5", complete_graph(5)),
        ("K3,3", complete_bipartite(3, 3)),
        ("K6", complete_graph(6)),
        ("P(5,2)", petersen(5, 2)),
    ]:
        instances.append((name, EdgeWeighting.uniform(g)))
    for s, k in [(3, 4), (3, 5), (3, 6), (4, 4)]:
        instances.append((f"Q_{s}({k}) designed", paper_weighting_q(s, k)))
        instances.append((f"Q_{s}({k}) uniform", EdgeWeighting.uniform(q_graph(s, k))))
    rng = random.Random(909)
    while len(instances) < 16 + 100:
        n = rng.randint(6, 9)
        g = random_connected_graph(n, rng.randint(n + 4, min(3 * n, n * (n - 1) // 2)), rng)
        if is_planar(g):
            continue
        instances.append(("random", EdgeWeighting(g, {e: rng.randint(1, 6) for e in g.edges})))
    exact_cache: dict = {}
    violations = []
    for name, w in instances:
        key = w.graph
        if key not in exact_cache:
            exact_cache[key] = skewness_exact(w.graph).value
        if counting_bound(w).bound > exact_cache[key]:
            violations.append(name)
    ok = not violations
    record_criterion(9, "certificate bound <= exact value", ok,
                     f"{len(instances)} instances, {len(violations)} violations")
    assert ok


def test_criterion_10_report_determinism(record_criterion):
    outputs = {}
    codes = {}
    for threads in ("1", "8"):
        buf = io.StringIO()
        codes[threads] = run(["report", "--threads", threads], out=buf, err=io.StringIO())
        outputs[threads] = buf.getvalue()
    same = outputs["1"].encode() == outputs["8"].encode()
    ok = same and codes["1"] == codes["8"] == 0
    record_criterion(10, "report byte-identical for --threads 1 and 8", ok,
                     f"identical: {same}, exit codes {codes['1']}/{codes['8']}, "
                     f"{len(outputs['1'].encode())} bytes")
    assert ok
