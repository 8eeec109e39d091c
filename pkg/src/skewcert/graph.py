"""Immutable simple undirected graphs and the structural edits the proofs need."""

from __future__ import annotations

import random
from collections import Counter, deque
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs and invalid structural edits."""


def norm_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


class Graph:
    """Simple undirected graph on vertices ``0 .. vertex_count - 1``.

    Edges are kept as a sorted tuple of ``(a, b)`` pairs with ``a < b`` so that
    every iteration over a graph is deterministic. Duplicate input pairs
    collapse (set semantics); self-loops are rejected.
    """

    __slots__ = ("_n", "_edges", "_labels", "_adj", "_edge_set", "_hash")

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[Sequence[int]] = (),
        labels: Sequence[str | None] | None = None,
    ) -> None:
        if vertex_count < 0:
            raise GraphError(f"vertex count must be non-negative, got {vertex_count}")
        edge_set: set[Edge] = set()
        for pair in edges:
            a, b = int(pair[0]), int(pair[1])
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            if not (0 <= a < vertex_count and 0 <= b < vertex_count):
                raise GraphError(f"edge ({a}, {b}) has an endpoint outside 0..{vertex_count - 1}")
            edge_set.add(norm_edge(a, b))
        if labels is not None:
            if len(labels) != vertex_count:
                raise GraphError(f"expected {vertex_count} labels, got {len(labels)}")
            labels = tuple(labels)
        self._n = vertex_count
        self._edges = tuple(sorted(edge_set))
        self._edge_set = frozenset(edge_set)
        self._labels: tuple[str | None, ...] | None = labels
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for a, b in self._edges:
            adj[a].append(b)
            adj[b].append(a)
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._hash: int | None = None

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def labels(self) -> tuple[str | None, ...] | None:
        return self._labels

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return norm_edge(a, b) in self._edge_set

    def label(self, v: int) -> str:
        if self._labels is not None and self._labels[v] is not None:
            return self._labels[v]  # type: ignore[return-value]
        return str(v)

    def vertex(self, label: str) -> int:
        """Index of the vertex carrying ``label``."""
        for v in range(self._n):
            if self.label(v) == label:
                return v
        raise GraphError(f"no vertex labelled {label!r}")

    def edge_label(self, e: Edge) -> str:
        return f"{self.label(e[0])}-{self.label(e[1])}"

    def add_edges(self, edges: Iterable[Sequence[int]]) -> Graph:
        return Graph(self._n, list(self._edges) + [tuple(e) for e in edges], self._labels)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``; labels travel along."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabelling must be a permutation of the vertex set")
        labels = None
        if self._labels is not None:
            new = [None] * self._n
            for v, p in enumerate(perm):
                new[p] = self._labels[v]
            labels = new
        return Graph(self._n, [(perm[a], perm[b]) for a, b in self._edges], labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and self._edges == other._edges
            and self._labels == other._labels
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._edges, self._labels))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self._n}, edge_count={len(self._edges)})"


def complete_graph(n: int) -> Graph:
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, [(a, p + b) for a in range(p) for b in range(q)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def random_graph(n: int, m: int, rng: random.Random) -> Graph:
    """Uniform choice of ``m`` distinct edges on ``n`` vertices."""
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    if m > len(pairs):
        raise GraphError(f"{n} vertices carry at most {len(pairs)} edges, asked for {m}")
    return Graph(n, rng.sample(pairs, m))


def random_connected_graph(n: int, m: int, rng: random.Random) -> Graph:
    """Random spanning tree (random attachment) plus ``m - n + 1`` further random edges."""
    if m < n - 1:
        raise GraphError(f"a connected graph on {n} vertices needs at least {n - 1} edges")
    order = list(range(n))
    rng.shuffle(order)
    edges = {norm_edge(order[i], order[rng.randrange(i)]) for i in range(1, n)}
    rest = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    if m - len(edges) > len(rest):
        raise GraphError(f"{n} vertices carry at most {len(rest) + len(edges)} edges, asked for {m}")
    edges.update(rng.sample(rest, m - len(edges)))
    return Graph(n, edges)


def delete_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    """Remove ``edges`` from ``g``; every pair must be an edge of ``g``."""
    drop = set()
    for pair in edges:
        e = norm_edge(int(pair[0]), int(pair[1]))
        if e not in g._edge_set:
            raise GraphError(f"edge {g.edge_label(e) if max(e) < g.vertex_count else e} is not in the graph")
        drop.add(e)
    if not drop:
        return g
    return Graph(g.vertex_count, [e for e in g.edges if e not in drop], g.labels)


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the surviving vertices, renumbered in ascending order."""
    drop = set()
    for v in vertices:
        if not 0 <= v < g.vertex_count:
            raise GraphError(f"vertex {v} is not in the graph")
        drop.add(v)
    if not drop:
        return g
    keep = [v for v in range(g.vertex_count) if v not in drop]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges if a in index and b in index]
    labels = [g.label(v) for v in keep] if g.labels is not None else None
    return Graph(len(keep), edges, labels)


def suppress_degree2(g: Graph) -> Graph:
    """Smooth away every degree-2 vertex.

    Each degree-2 vertex is replaced by an edge joining its two neighbours,
    in ascending vertex order. Raises :class:`GraphError` instead of creating a
    parallel edge, since the result would no longer be homeomorphic as a
    simple graph.
    """
    adj = [set(g.neighbors(v)) for v in g.vertices()]
    removed = []
    for w in g.vertices():
        if len(adj[w]) != 2:
            continue
        a, b = sorted(adj[w])
        if b in adj[a]:
            raise GraphError(
                f"suppressing {g.label(w)} would create a parallel edge {g.label(a)}-{g.label(b)}"
            )
        adj[a].discard(w)
        adj[b].discard(w)
        adj[a].add(b)
        adj[b].add(a)
        adj[w] = set()
        removed.append(w)
    if not removed:
        return g
    edges = [(a, b) for a in g.vertices() for b in adj[a] if a < b]
    return delete_vertices(Graph(g.vertex_count, edges, g.labels), removed)


def degree_sequence(g: Graph) -> list[int]:
    """Degrees in non-increasing order."""
    return sorted((g.degree(v) for v in g.vertices()), reverse=True)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.vertex_count
    components = []
    for root in g.vertices():
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        components.append(sorted(comp))
    return components


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def girth(g: Graph) -> int:
    """Length of a shortest cycle, or 0 for a forest."""
    best = 0
    n = g.vertex_count
    for s in g.vertices():
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if best and 2 * dist[v] >= best:
                break
            for w in g.neighbors(v):
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    length = dist[v] + dist[w] + 1
                    if not best or length < best:
                        best = length
    return best


# ---------------------------------------------------------------------------
# Isomorphism: colour refinement with individualisation and backtracking
# ---------------------------------------------------------------------------


def _refine(
    adj_a: Sequence[Sequence[int]],
    adj_b: Sequence[Sequence[int]],
    col_a: list[int],
    col_b: list[int],
) -> tuple[list[int], list[int]] | None:
    classes = len(set(col_a) | set(col_b))
    while True:
        sig_a = [(col_a[v], tuple(sorted(col_a[w] for w in adj_a[v]))) for v in range(len(adj_a))]
        sig_b = [(col_b[v], tuple(sorted(col_b[w] for w in adj_b[v]))) for v in range(len(adj_b))]
        palette = {s: i for i, s in enumerate(sorted(set(sig_a) | set(sig_b)))}
        col_a = [palette[s] for s in sig_a]
        col_b = [palette[s] for s in sig_b]
        if Counter(col_a) != Counter(col_b):
            return None
        if len(palette) == classes:
            return col_a, col_b
        classes = len(palette)


def _match(
    a: Graph, b: Graph, col_a: list[int], col_b: list[int]
) -> dict[int, int] | None:
    refined = _refine(a._adj, b._adj, col_a, col_b)
    if refined is None:
        return None
    col_a, col_b = refined
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(col_a):
        cells.setdefault(c, []).append(v)
    open_cells = [(len(vs), c) for c, vs in cells.items() if len(vs) > 1]
    if not open_cells:
        where = {c: v for v, c in enumerate(col_b)}
        mapping = {v: where[c] for v, c in enumerate(col_a)}
        if all(b.has_edge(mapping[x], mapping[y]) for x, y in a.edges):
            return mapping
        return None
    _, colour = min(open_cells)
    v = cells[colour][0]
    fresh = max(col_a) + 1
    for w in (u for u, c in enumerate(col_b) if c == colour):
        ca, cb = list(col_a), list(col_b)
        ca[v] = fresh
        cb[w] = fresh
        found = _match(a, b, ca, cb)
        if found is not None:
            return found
    return None


def find_isomorphism(a: Graph, b: Graph) -> dict[int, int] | None:
    """An edge-preserving bijection ``V(a) -> V(b)``, or ``None``."""
    if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        return None
    if degree_sequence(a) != degree_sequence(b):
        return None
    mapping = _match(a, b, [0] * a.vertex_count, [0] * b.vertex_count)
    if mapping is not None and not is_isomorphism(a, b, mapping):
        raise AssertionError("isomorphism search produced an invalid witness")
    return mapping


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return find_isomorphism(a, b) is not None


def is_isomorphism(a: Graph, b: Graph, mapping: Mapping[int, int]) -> bool:
    """Check that ``mapping`` is a bijection carrying E(a) exactly onto E(b)."""
    if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        return False
    if sorted(mapping) != list(a.vertices()) or sorted(mapping.values()) != list(b.vertices()):
        return False
    return all(b.has_edge(mapping[x], mapping[y]) for x, y in a.edges)
