from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import all_cycles
from skewcert.graph import (
    Graph,
    GraphError,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_graph,
    degree_sequence,
    delete_edges,
    delete_vertices,
    find_isomorphism,
    girth,
    is_connected,
    is_isomorphic,
    is_isomorphism,
    path_graph,
    random_connected_graph,
    random_graph,
    suppress_degree2,
)
from skewcert.io import ParseError, format_edgelist, parse_edgelist, parse_weights, to_dot


@st.composite
def graphs(draw, max_n: int = 9):
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_edges_are_canonical_and_deduplicated():
    g = Graph(4, [(2, 1), (1, 2), (3, 0)])
    assert g.edges == ((0, 3), (1, 2))
    assert g.neighbors(1) == (2,)
    assert g.has_edge(2, 1)


@pytest.mark.parametrize("edges", [[(1, 1)], [(0, 4)], [(-1, 0)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphError):
        Graph(4, edges)


def test_label_lookup():
    g = Graph(2, [(0, 1)], ["a", None])
    assert g.label(0) == "a" and g.label(1) == "1"
    assert g.vertex("a") == 0
    with pytest.raises(GraphError):
        g.vertex("zzz")


def test_small_constructors():
    assert complete_graph(5).edge_count == 10
    assert complete_bipartite(3, 3).edge_count == 9
    assert cycle_graph(6).edge_count == 6
    assert path_graph(4).edges == ((0, 1), (1, 2), (2, 3))


def test_delete_edges_names_missing_pair():
    g = complete_graph(5)
    assert delete_edges(g, [(0, 1)]).edge_count == 9
    with pytest.raises(GraphError, match="3"):
        delete_edges(cycle_graph(5), [(0, 3)])


def test_delete_vertices_recompacts_and_keeps_labels():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)], ["a", "b", "c", "d"])
    h = delete_vertices(g, [1])
    assert h.vertex_count == 3
    assert h.labels == ("a", "c", "d")
    assert h.edges == ((1, 2),)


def test_suppress_degree2_smooths_subdivision():
    # K4 with every edge subdivided once
    k4 = complete_graph(4)
    edges, n = [], 4
    for a, b in k4.edges:
        edges += [(a, n), (n, b)]
        n += 1
    s = suppress_degree2(Graph(n, edges))
    assert is_isomorphic(s, k4)


def test_suppress_degree2_rejects_parallel_edge():
    # a 4-cycle with a chord: smoothing vertex 3 would duplicate edge 0-2
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    with pytest.raises(GraphError):
        suppress_degree2(g)


def test_components_and_degrees():
    g = Graph(6, [(0, 1), (1, 2), (4, 5)])
    assert connected_components(g) == [[0, 1, 2], [3], [4, 5]]
    assert not is_connected(g)
    assert degree_sequence(g) == [2, 1, 1, 1, 1, 0]


@pytest.mark.parametrize(
    "g, expected",
    [(complete_graph(4), 3), (cycle_graph(7), 7), (complete_bipartite(3, 3), 4), (path_graph(5), 0)],
)
def test_girth_examples(g, expected):
    assert girth(g) == expected


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_girth_matches_cycle_enumeration(g):
    cycles = all_cycles(g)
    assert girth(g) == (min(map(len, cycles)) if cycles else 0)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_isomorphism_found_under_relabelling(g, r):
    perm = list(range(g.vertex_count))
    r.shuffle(perm)
    h = g.relabel(perm)
    mapping = find_isomorphism(g, h)
    assert mapping is not None and is_isomorphism(g, h, mapping)


def test_nonisomorphic_pair_with_equal_degrees():
    # two 3-regular graphs on 6 vertices: K3,3 and the prism
    prism = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    assert degree_sequence(prism) == degree_sequence(complete_bipartite(3, 3))
    assert not is_isomorphic(prism, complete_bipartite(3, 3))


def test_random_generators(rng):
    g = random_graph(8, 12, rng)
    assert g.edge_count == 12
    c = random_connected_graph(9, 12, rng)
    assert c.edge_count == 12 and is_connected(c)
    with pytest.raises(GraphError):
        random_graph(3, 4, rng)


# --- edge-list format -------------------------------------------------------


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_edgelist_round_trip(g):
    assert parse_edgelist(format_edgelist(g)) == g


def test_round_trip_keeps_labels():
    g = Graph(3, [(0, 1), (1, 2)], ["u0", "v0", "x1"])
    assert parse_edgelist(format_edgelist(g)) == g


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("graph 3\n0 1\n1 x\n", 3, 3),
        ("0 1\n", 1, 1),
        ("graph 3\n0 5\n", 2, 3),
        ("graph 3\n\n  2 2\n", 3, 3),
        ("graph 3\n0 1 2\n", 2, 1),
        ("graph -1\n", 1, 7),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_edgelist(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_parse_weights():
    g = cycle_graph(3)
    assert parse_weights("0 1 2\n# note\n2 1 5 # trailing\n0 2 1\n", g) == {(0, 1): 2, (1, 2): 5, (0, 2): 1}
    with pytest.raises(ParseError):
        parse_weights("0 1 2\n1 0 3\n", g)
    with pytest.raises(ParseError):
        parse_weights("0 1 two\n", g)


def test_dot_highlights_edges():
    dot = to_dot(cycle_graph(3), highlight=[(2, 0)])
    assert dot.startswith("graph G {")
    assert '0 -- 2 [style="bold,dashed"];' in dot
    assert "0 -- 1;" in dot


def test_random_graph_is_seeded():
    assert random_graph(9, 15, random.Random(3)) == random_graph(9, 15, random.Random(3))
