"""Planarity decision, embedding, and Kuratowski witnesses.

The decision kernel (left-right algorithm) runs compiled when the extension
is built and falls back to pure Python otherwise; see ``BACKEND``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from skewcert.graph import Edge, Graph, GraphError
from skewcert.planarity import _lr_py
from skewcert.planarity._backend import BACKEND, available_kernels, kernel
from skewcert.planarity.embedding import EmbeddingError, PlanarEmbedding, trace_faces

__all__ = [
    "BACKEND",
    "EmbeddingError",
    "NonplanarError",
    "NonplanarWitness",
    "PlanarEmbedding",
    "WitnessKind",
    "available_kernels",
    "embed",
    "is_planar",
    "is_planar_edges",
    "kuratowski_witness",
    "minimal_nonplanar_edges",
    "trace_faces",
    "witness_kind",
]


class WitnessKind(str, Enum):
    K5 = "K5"
    K33 = "K33"


@dataclass(frozen=True)
class NonplanarWitness:
    """Edge set of a subdivided K5 or K3,3 inside some host graph."""

    edges: tuple[Edge, ...]
    kind: WitnessKind

    def __len__(self) -> int:
        return len(self.edges)


class NonplanarError(GraphError):
    def __init__(self, witness: NonplanarWitness) -> None:
        super().__init__(f"graph is not planar ({witness.kind.value} subdivision on {len(witness)} edges)")
        self.witness = witness


def is_planar_edges(n: int, edges: Sequence[Edge]) -> bool:
    return kernel.is_planar(n, [a for a, _ in edges], [b for _, b in edges])


def is_planar(g: Graph) -> bool:
    return is_planar_edges(g.vertex_count, g.edges)


def witness_kind(edges: Iterable[Edge]) -> WitnessKind | None:
    """K5 / K33 if ``edges`` form a subdivision of that graph, else ``None``."""
    deg: Counter[int] = Counter()
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    branch = sorted(v for v, d in deg.items() if d != 2)
    if any(deg[v] not in (3, 4) for v in branch):
        return None
    # contract each maximal path of degree-2 vertices to an edge between branch vertices
    contracted: Counter[tuple[int, int]] = Counter()
    for s in branch:
        for first in adj[s]:
            prev, cur = s, first
            while deg[cur] == 2:
                a, b = adj[cur]
                prev, cur = cur, (b if a == prev else a)
            if s < cur:
                contracted[(s, cur)] += 1
            elif s == cur:
                return None
    if any(c != 1 for c in contracted.values()):
        return None
    pairs = set(contracted)
    if len(branch) == 5 and all(deg[v] == 4 for v in branch) and len(pairs) == 10:
        return WitnessKind.K5
    # a simple cubic graph on 6 vertices is K3,3 exactly when it is bipartite
    if len(branch) == 6 and all(deg[v] == 3 for v in branch) and len(pairs) == 9:
        if _bipartite(branch, pairs):
            return WitnessKind.K33
    return None


def _bipartite(vertices: Sequence[int], pairs: Iterable[tuple[int, int]]) -> bool:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b in pairs:
        adj[a].append(b)
        adj[b].append(a)
    colour: dict[int, int] = {}
    for root in vertices:
        if root in colour:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def minimal_nonplanar_edges(
    n: int, edges: Sequence[Edge], order: Sequence[int] | None = None
) -> tuple[list[Edge], int]:
    """Greedy minimal nonplanar subset of ``edges`` plus the planarity tests used.

    ``order`` lists the edge positions in the order removal is attempted;
    the default is the given (canonical) order.
    """
    if order is None:
        order = range(len(edges))
    kept, tests = kernel.minimize_nonplanar(
        n, [a for a, _ in edges], [b for _, b in edges], list(order)
    )
    return [edges[i] for i in kept], tests


def kuratowski_witness(g: Graph) -> NonplanarWitness:
    """A minimal nonplanar edge set, minimalised in canonical edge order."""
    if is_planar(g):
        raise GraphError("graph is planar; no Kuratowski witness exists")
    edges, _ = minimal_nonplanar_edges(g.vertex_count, g.edges)
    kind = witness_kind(edges)
    if kind is None:
        raise AssertionError("minimal nonplanar edge set is not a K5/K3,3 subdivision")
    return NonplanarWitness(tuple(edges), kind)


def embed(g: Graph) -> PlanarEmbedding:
    """Planar rotation system with traced faces; raises :class:`NonplanarError`."""
    rotation = _lr_py.rotation_system(
        g.vertex_count, [a for a, _ in g.edges], [b for _, b in g.edges]
    )
    if rotation is None:
        raise NonplanarError(kuratowski_witness(g))
    return PlanarEmbedding.from_rotation(g, rotation)
