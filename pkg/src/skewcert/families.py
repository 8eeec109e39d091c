"""Generalized Petersen graphs P(n, k), the rim-and-hub graphs Q_s(k), and the
explicit constructions built on them.

Vertex numbering
----------------
``petersen(n, k)``
    ``u_i -> i`` and ``v_i -> n + i`` for ``i = 0 .. n-1``.
``q_graph(s, k)``
    rim vertex ``i -> i`` for ``i = 0 .. sk-1`` and hub ``x_j -> sk + j``.
"""

from __future__ import annotations

from dataclasses import dataclass

from skewcert.graph import (
    Edge,
    Graph,
    GraphError,
    delete_edges,
    delete_vertices,
    find_isomorphism,
    is_isomorphism,
    norm_edge,
    suppress_degree2,
)


class FamilyError(GraphError):
    """Parameters outside a family's valid range."""


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# ---------------------------------------------------------------------------
# P(n, k)
# ---------------------------------------------------------------------------


def check_petersen(n: int, k: int) -> None:
    if not 1 <= k <= n - 1:
        raise FamilyError(f"P(n, k) needs 1 <= k <= n-1, got n={n}, k={k}")
    if n == 2 * k:
        raise FamilyError(f"P({n}, {k}) has parallel inner edges (n = 2k)")


def u(n: int, i: int) -> int:
    return i % n


def v(n: int, i: int) -> int:
    return n + i % n


def petersen(n: int, k: int) -> Graph:
    check_petersen(n, k)
    edges = []
    for i in range(n):
        edges.append((u(n, i), u(n, i + 1)))
        edges.append((u(n, i), v(n, i)))
        edges.append((v(n, i), v(n, i + k)))
    labels = [f"u{i}" for i in range(n)] + [f"v{i}" for i in range(n)]
    return Graph(2 * n, edges, labels)


def petersen_edge_kind(n: int, e: Edge) -> str:
    """``"rim"`` for u_i u_{i+1}, ``"spoke"`` for u_i v_i, ``"inner"`` for v_i v_{i+k}."""
    a, b = sorted(e)
    if b < n:
        return "rim"
    if a >= n:
        return "inner"
    return "spoke"


# ---------------------------------------------------------------------------
# Q_s(k)
# ---------------------------------------------------------------------------


def check_q(s: int, k: int) -> None:
    if s < 3 or k < 1:
        raise FamilyError(f"Q_s(k) needs s >= 3 and k >= 1, got s={s}, k={k}")


def hub(s: int, k: int, j: int) -> int:
    return s * k + j % k


def q_graph(s: int, k: int) -> Graph:
    check_q(s, k)
    rim = s * k
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    for j in range(k):
        for m in range(s):
            edges.append(((j + m * k) % rim, hub(s, k, j)))
    labels = [str(i) for i in range(rim)] + [f"x{j}" for j in range(k)]
    return Graph(rim + k, edges, labels)


def is_rim_edge(s: int, k: int, e: Edge) -> bool:
    return max(e) < s * k


def q_skewness_formula(s: int, k: int) -> int:
    """The closed form ceil((s-2)k/2) + 1."""
    return ceil_div((s - 2) * k, 2) + 1


def h_deletion_set(s: int, k: int) -> list[Edge]:
    """Rim edges whose removal turns Q_s(k) into the planar graph H_s(k).

    Even ``k`` removes ``(2i-1)(2i)`` for ``i = k/2 .. k/2 + k(s-2)/2``; odd ``k``
    removes ``(sk-1)0`` together with ``(2i-1)(2i)`` for
    ``i = (k+1)/2 .. (k-1)/2 + ceil(k(s-2)/2)``. Indices are reduced mod sk and
    a repeated edge is reported rather than merged.
    """
    check_q(s, k)
    if k < 4:
        raise FamilyError(f"the deletion construction needs k >= 4, got k={k}")
    rim = s * k
    if k % 2 == 0:
        start = k // 2
        stop = k // 2 + k * (s - 2) // 2
        picked = []
    else:
        start = (k - 1) // 2 + 1
        stop = (k - 1) // 2 + ceil_div(k * (s - 2), 2)
        picked = [norm_edge(rim - 1, 0)]
    for i in range(start, stop + 1):
        picked.append(norm_edge((2 * i - 1) % rim, (2 * i) % rim))
    if len(set(picked)) != len(picked):
        dupes = sorted({e for e in picked if picked.count(e) > 1})
        raise FamilyError(f"deletion formula for Q_{s}({k}) repeats edges {dupes}")
    return sorted(picked)


def h_graph(s: int, k: int) -> Graph:
    return delete_edges(q_graph(s, k), h_deletion_set(s, k))


# ---------------------------------------------------------------------------
# Reduction of P(4k, k) to a subdivision of Q_3(k)
# ---------------------------------------------------------------------------


def j_removed_vertices(k: int) -> list[int]:
    n = 4 * k
    return [u(n, i) for i in range(1, k)] + [v(n, i) for i in range(1, k)]


def j_removed_edge(k: int) -> Edge:
    """The inner edge v_{3k} v_0 deleted alongside the vertices (v_0 = v_{4k})."""
    n = 4 * k
    return norm_edge(v(n, 3 * k), v(n, 0))


def expected_degree_two(k: int) -> list[str]:
    """u_0, v_0, u_k, v_{k+1} .. v_{2k-1}, v_{4k-1} .. v_{3k}, in that order."""
    return (
        ["u0", "v0", f"u{k}"]
        + [f"v{i}" for i in range(k + 1, 2 * k)]
        + [f"v{i}" for i in range(4 * k - 1, 3 * k - 1, -1)]
    )


def j_graph(k: int) -> Graph:
    if k < 3:
        raise FamilyError(f"the reduction needs k >= 3, got k={k}")
    g = petersen(4 * k, k)
    g = delete_edges(g, [j_removed_edge(k)])
    return delete_vertices(g, j_removed_vertices(k))


@dataclass(frozen=True)
class Q3Reduction:
    k: int
    j: Graph
    degree_two: tuple[str, ...]
    reduced: Graph
    isomorphic: bool
    mapping: dict[int, int] | None
    rim_cycle_mapping_ok: bool

    @property
    def degree_two_matches(self) -> bool:
        return sorted(self.degree_two) == sorted(expected_degree_two(self.k))


def rim_cycle_mapping(k: int, reduced: Graph) -> dict[int, int]:
    """Map Q_3(k) onto the reduced graph with v_k u_{k+1} .. u_{4k-1} as the rim.

    Rim position 0 goes to v_k, position m to u_{k+m}, and hub x_j to v_{2k+j}.
    """
    q = 3 * k
    targets = {0: f"v{k}"}
    targets.update({m: f"u{k + m}" for m in range(1, q)})
    targets.update({q + j: f"v{2 * k + j}" for j in range(k)})
    return {src: reduced.vertex(name) for src, name in targets.items()}


def q3_reduction(k: int) -> Q3Reduction:
    if k < 3 or k % 2 == 0:
        raise FamilyError(f"the reduction is stated for odd k >= 3, got k={k}")
    j = j_graph(k)
    degree_two = tuple(j.label(x) for x in j.vertices() if j.degree(x) == 2)
    reduced = suppress_degree2(j)
    target = q_graph(3, k)
    mapping = find_isomorphism(reduced, target)
    explicit = rim_cycle_mapping(k, reduced)
    return Q3Reduction(
        k=k,
        j=j,
        degree_two=degree_two,
        reduced=reduced,
        isomorphic=mapping is not None,
        mapping=mapping,
        rim_cycle_mapping_ok=is_isomorphism(target, reduced, explicit),
    )
