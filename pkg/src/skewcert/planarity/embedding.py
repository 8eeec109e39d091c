"""Combinatorial embeddings (rotation systems) and their faces."""

from __future__ import annotations

from dataclasses import dataclass, field

from skewcert.graph import Edge, Graph, connected_components, norm_edge

Dart = tuple[int, int]


class EmbeddingError(RuntimeError):
    """A rotation system that violates Euler's formula; indicates a bug."""


def trace_faces(rotation: list[list[int]] | tuple[tuple[int, ...], ...]) -> list[tuple[Dart, ...]]:
    """Boundary walks of a rotation system.

    The dart following ``(v, w)`` is ``(w, x)`` with ``x`` the neighbour
    preceding ``v`` in the clockwise order around ``w``. Walks start from the
    smallest unvisited dart so the output is deterministic.
    """
    position = [{w: i for i, w in enumerate(r)} for r in rotation]
    seen: set[Dart] = set()
    faces = []
    for v, nbrs in enumerate(rotation):
        for w in nbrs:
            if (v, w) in seen:
                continue
            walk = []
            a, b = v, w
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append((a, b))
                around = rotation[b]
                a, b = b, around[(position[b][a] - 1) % len(around)]
            faces.append(tuple(walk))
    return faces


@dataclass(frozen=True)
class PlanarEmbedding:
    """Clockwise rotation at every vertex plus the derived boundary walks.

    For a disconnected graph each component contributes its own walks, so the
    outer face appears once per component with edges; ``face_count`` applies
    Euler's formula ``F = E - V + 1 + C`` for the whole plane graph.
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[Dart, ...], ...] = field(repr=False)

    @classmethod
    def from_rotation(cls, g: Graph, rotation: list[list[int]]) -> PlanarEmbedding:
        faces = trace_faces(rotation)
        emb = cls(g, tuple(tuple(r) for r in rotation), tuple(faces))
        emb.check()
        return emb

    @property
    def component_count(self) -> int:
        return len(connected_components(self.graph))

    @property
    def face_count(self) -> int:
        g = self.graph
        return g.edge_count - g.vertex_count + 1 + self.component_count

    def face_edges(self, index: int) -> list[Edge]:
        """Edges along a boundary walk, bridges listed twice."""
        return [norm_edge(a, b) for a, b in self.faces[index]]

    def face_vertices(self, index: int) -> list[int]:
        return [a for a, _ in self.faces[index]]

    def check(self) -> None:
        g = self.graph
        for v in g.vertices():
            if sorted(self.rotation[v]) != list(g.neighbors(v)):
                raise EmbeddingError(f"rotation at {v} is not a permutation of its neighbours")
        darts = sum(len(f) for f in self.faces)
        if darts != 2 * g.edge_count:
            raise EmbeddingError(f"faces cover {darts} darts, expected {2 * g.edge_count}")
        # one walk set per component that has edges: E_c - V_c + 2 each
        big = [c for c in connected_components(g) if len(c) > 1]
        walks_expected = g.edge_count - sum(len(c) for c in big) + 2 * len(big)
        if len(self.faces) != walks_expected:
            raise EmbeddingError(
                f"traced {len(self.faces)} boundary walks, Euler's formula needs {walks_expected}"
            )
