from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_planar_subsets
from skewcert.certify import EdgeWeighting, counting_bound, paper_weighting_q
from skewcert.families import petersen, q_graph
from skewcert.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    delete_edges,
    random_connected_graph,
    random_graph,
)
from skewcert.planarity import is_planar
from skewcert.solver import Status, skewness_bruteforce, skewness_exact, skewness_heuristic

NAMED = {
    "K5": (complete_graph(5), 1),
    "K3,3": (complete_bipartite(3, 3), 1),
    "K6": (complete_graph(6), 3),
    "K4,4": (complete_bipartite(4, 4), 4),
    "P(5,2)": (petersen(5, 2), 2),
    "Q_3(4)": (q_graph(3, 4), 3),
}


@pytest.mark.parametrize("name", sorted(NAMED))
def test_named_graphs_exact_equals_brute(name):
    g, value = NAMED[name]
    exact = skewness_exact(g)
    brute = skewness_bruteforce(g)
    assert exact.value == brute.value == value
    assert exact.deletion_set == brute.deletion_set
    assert exact.status is Status.OPTIMAL and exact.canonical


def test_k6_needs_three_deletions():
    # 15 edges against the planar maximum 3 * 6 - 6 = 12
    assert brute_planar_subsets(complete_graph(6), is_planar) == 3


def test_petersen_brute_force_oracle():
    assert brute_planar_subsets(petersen(5, 2), is_planar) == 2


def test_planar_input():
    for solve in (skewness_exact, skewness_bruteforce, skewness_heuristic):
        r = solve(cycle_graph(6))
        assert r.value == 0 and r.deletion_set == ()


def test_bruteforce_q35():
    assert skewness_bruteforce(q_graph(3, 5)).value == 4


def test_bruteforce_cap():
    r = skewness_bruteforce(complete_graph(6), cap=2)
    assert r.status is Status.UNRESOLVED and r.lower_bound == 3


def test_random_exact_matches_brute_force():
    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(5, 8)
        g = random_graph(n, rng.randint(9, min(16, n * (n - 1) // 2)), rng)
        e, b = skewness_exact(g), skewness_bruteforce(g)
        assert (e.value, e.deletion_set) == (b.value, b.deletion_set)


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_value_invariant_under_relabelling(r):
    g = random_graph(8, 18, r)
    perm = list(range(8))
    r.shuffle(perm)
    h = g.relabel(perm)
    a, b = skewness_exact(g), skewness_exact(h)
    assert a.value == b.value
    mapped = [tuple(sorted((perm[x], perm[y]))) for x, y in a.deletion_set]
    assert is_planar(delete_edges(h, mapped))


@pytest.mark.parametrize("s, k", [(3, 4), (3, 5), (4, 4)])
def test_bound_exact_heuristic_chain(s, k):
    g = q_graph(s, k)
    bound = counting_bound(paper_weighting_q(s, k)).bound
    exact = skewness_exact(g, lower_bound=bound).value
    heuristic = skewness_heuristic(g, restarts=5).value
    assert bound <= exact <= heuristic


def test_deletion_sets_leave_planar_residuals():
    rng = random.Random(4)
    for _ in range(50):
        g = random_graph(9, 22, rng)
        for r in (skewness_exact(g), skewness_heuristic(g, restarts=3, seed=rng.randrange(100))):
            assert len(r.deletion_set) == r.value
            assert is_planar(delete_edges(g, r.deletion_set))


def test_node_cap_gives_unresolved_not_wrong():
    g = q_graph(3, 6)
    r = skewness_exact(g, budget=5)
    assert r.status is Status.UNRESOLVED
    assert r.lower_bound <= 4 <= r.value
    assert is_planar(delete_edges(g, r.deletion_set))


def test_caller_lower_bound_is_used():
    r = skewness_exact(q_graph(3, 6), lower_bound=4)
    assert r.value == 4 and r.status is Status.OPTIMAL


def test_heuristic_q44():
    r = skewness_heuristic(q_graph(4, 4), restarts=10)
    assert 5 <= r.value <= 6
    assert r.status is Status.UPPER_BOUND


def test_heuristic_seed_determinism():
    g = petersen(12, 5)
    a = skewness_heuristic(g, restarts=6, seed=3)
    b = skewness_heuristic(g, restarts=6, seed=3)
    assert a.deletion_set == b.deletion_set


@pytest.mark.slow
def test_heuristic_p36_9_reaches_upper_region():
    r = skewness_heuristic(petersen(36, 9), restarts=20)
    assert 10 <= r.value <= 11


def test_result_record():
    r = skewness_exact(complete_graph(5))
    rec = r.to_record(timings=False)
    assert rec["value"] == 1 and rec["status"] == "optimal" and "elapsed" not in rec
    assert "skewness: 1" in r.format_text(timings=False)


def test_weighted_soundness_on_random_graphs():
    rng = random.Random(21)
    checked = 0
    while checked < 40:
        g = random_connected_graph(8, rng.randint(14, 22), rng)
        if is_planar(g):
            continue
        w = EdgeWeighting(g, {e: rng.randint(1, 6) for e in g.edges})
        assert counting_bound(w).bound <= skewness_exact(g).value
        checked += 1


def test_disconnected_graph_skewness_adds():
    k5 = complete_graph(5)
    g = Graph(10, list(k5.edges) + [(a + 5, b + 5) for a, b in k5.edges])
    assert skewness_exact(g).value == 2


def test_non_canonical_optimum_is_flagged_in_text():
    r = skewness_exact(complete_graph(6), budget=1)
    assert r.status is Status.OPTIMAL and r.value == 3
    assert not r.canonical
    assert "not the lexicographically least" in r.format_text(timings=False)
    assert "not the lexicographically least" not in skewness_exact(complete_graph(6)).format_text(timings=False)
