from __future__ import annotations

from collections import Counter
from itertools import combinations

import pytest

from skewcert.families import (
    FamilyError,
    expected_degree_two,
    h_deletion_set,
    h_graph,
    j_graph,
    j_removed_edge,
    petersen,
    petersen_edge_kind,
    q3_reduction,
    q_graph,
    q_skewness_formula,
)
from skewcert.graph import delete_edges, is_isomorphic
from skewcert.planarity import embed, is_planar

GRID = [(s, k) for s in range(3, 9) for k in range(4, 13)]


def test_petersen_shape():
    g = petersen(36, 9)
    assert (g.vertex_count, g.edge_count) == (72, 108)
    assert all(g.degree(x) == 3 for x in g.vertices())
    assert g.label(0) == "u0" and g.label(36) == "v0"


@pytest.mark.parametrize("n, k", [(4, 2), (5, 0), (5, 5)])
def test_petersen_rejects_bad_parameters(n, k):
    with pytest.raises(FamilyError):
        petersen(n, k)


@pytest.mark.parametrize("n, k", [(5, 2), (7, 2), (7, 3), (8, 3), (9, 2)])
def test_petersen_symmetry(n, k):
    assert is_isomorphic(petersen(n, k), petersen(n, n - k))


def test_edge_kinds():
    assert petersen_edge_kind(8, (0, 1)) == "rim"
    assert petersen_edge_kind(8, (2, 10)) == "spoke"
    assert petersen_edge_kind(8, (8, 11)) == "inner"


@pytest.mark.parametrize("s, k, v, e", [(5, 8, 48, 80), (4, 4, 20, 32), (3, 1, 4, 6)])
def test_q_graph_sizes(s, k, v, e):
    g = q_graph(s, k)
    assert (g.vertex_count, g.edge_count) == (v, e)


def test_q31_is_k4():
    from skewcert.graph import complete_graph

    assert is_isomorphic(q_graph(3, 1), complete_graph(4))


@pytest.mark.parametrize("s, k", [(3, 4), (5, 8), (6, 5)])
def test_q_graph_degrees(s, k):
    degrees = Counter(q_graph(s, k).degree(x) for x in range(s * k + k))
    expected = Counter({3: s * k})
    expected[s] += k
    assert degrees == expected


def test_q_rejects_small_s():
    with pytest.raises(FamilyError):
        q_graph(2, 4)


def test_deletion_set_for_q44():
    assert h_deletion_set(4, 4) == [(3, 4), (5, 6), (7, 8), (9, 10), (11, 12)]


def test_deletion_set_for_q58_follows_the_formula():
    # the formula yields 13 edges; 13 is also the certified lower bound
    deleted = h_deletion_set(5, 8)
    assert len(deleted) == 13 == q_skewness_formula(5, 8)
    assert is_planar(delete_edges(q_graph(5, 8), deleted))


def test_odd_k_includes_wraparound_edge():
    assert (0, 14) in h_deletion_set(3, 5)


def test_deletion_set_rejects_small_k():
    with pytest.raises(FamilyError):
        h_deletion_set(4, 3)


@pytest.mark.parametrize("s, k", GRID)
def test_residual_planar_with_expected_faces(s, k):
    deleted = h_deletion_set(s, k)
    t = len(deleted)
    assert t == q_skewness_formula(s, k)
    assert all(max(e) < s * k for e in deleted)
    emb = embed(h_graph(s, k))
    assert emb.face_count == len(emb.faces) == s * k - k - t + 2


@pytest.mark.parametrize("s, k", [(3, 4), (3, 5), (4, 4), (4, 5)])
def test_proper_subsets_of_deletion_set_stay_nonplanar(s, k):
    q = q_graph(s, k)
    deleted = h_deletion_set(s, k)
    for subset in combinations(deleted, len(deleted) - 1):
        assert not is_planar(delete_edges(q, subset))


def test_reduction_edge_is_an_inner_edge():
    k = 9
    g = petersen(4 * k, k)
    a, b = j_removed_edge(k)
    assert g.has_edge(a, b)
    assert {g.label(a), g.label(b)} == {"v0", "v27"}


@pytest.mark.parametrize("k", [5, 7, 9, 11])
def test_q3_reduction(k):
    red = q3_reduction(k)
    assert red.isomorphic and red.rim_cycle_mapping_ok
    assert red.degree_two_matches
    assert (red.reduced.vertex_count, red.reduced.edge_count) == (4 * k, 6 * k)


def test_degree_two_list_for_k7():
    j = j_graph(7)
    found = sorted(j.label(x) for x in j.vertices() if j.degree(x) == 2)
    assert found == sorted(expected_degree_two(7))
    assert expected_degree_two(7)[:4] == ["u0", "v0", "u7", "v8"]


@pytest.mark.parametrize("k", [2, 4])
def test_q3_reduction_rejects_bad_k(k):
    with pytest.raises(FamilyError):
        q3_reduction(k)
