from __future__ import annotations

import itertools

from skewcert.graph import Graph


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges)
    return h


def all_cycles(g: Graph) -> set[tuple[int, ...]]:
    """Every simple cycle as a canonical vertex tuple, by plain DFS."""
    found = set()
    for s in g.vertices():
        stack = [(s, [s])]
        while stack:
            x, path = stack.pop()
            for y in g.neighbors(x):
                if y == s and len(path) >= 3:
                    found.add(_canon(path))
                elif y > s and y not in path:
                    stack.append((y, path + [y]))
    return found


def _canon(path: list[int]) -> tuple[int, ...]:
    i = path.index(min(path))
    rot = path[i:] + path[:i]
    rev = [rot[0]] + rot[:0:-1]
    return tuple(min(rot, rev))


def brute_planar_subsets(g: Graph, is_planar) -> int:
    """Skewness by trying every subset, independent of the solver module."""
    edges = list(g.edges)
    for size in range(len(edges) + 1):
        for combo in itertools.combinations(edges, size):
            gone = set(combo)
            if is_planar(Graph(g.vertex_count, [e for e in edges if e not in gone])):
                return size
    raise AssertionError("unreachable")
