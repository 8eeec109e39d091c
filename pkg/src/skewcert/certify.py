"""Edge-weight counting certificates for skewness lower bounds.

If ``t`` edges are deleted from a connected nonplanar graph ``G`` leaving a
connected planar spanning ``H``, Euler gives ``F(H) = E - V - t + 2`` faces.
Every face boundary of ``H`` contains a cycle, so it weighs at least the
weighted girth ``g``; every edge lies on two face sides, so the face weights
sum to ``2 W(H) <= 2 (W - w_min t)``. Rearranged::

    t >= (g (E - V + 2) - 2 W) / (g - 2 w_min)

Everything here is integer or :class:`fractions.Fraction` arithmetic.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from skewcert.families import (
    FamilyError,
    ceil_div,
    check_q,
    is_rim_edge,
    petersen,
    petersen_edge_kind,
    q_graph,
    u,
    v,
)
from skewcert.graph import Edge, Graph, GraphError, is_connected, norm_edge
from skewcert.planarity import PlanarEmbedding, is_planar

Cycle = tuple[int, ...]

ASSUMPTION = (
    "an optimal residual planar graph is connected and spanning, and every "
    "face boundary walk (bridges counted twice) weighs at least the weighted girth"
)


class CertificateError(ValueError):
    """Inputs for which the counting inequality cannot be instantiated."""


class AuditError(RuntimeError):
    """Face weights that do not sum to twice the edge weight; an embedding bug."""


# ---------------------------------------------------------------------------
# Weightings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeWeighting:
    """Integer weight on every edge of ``graph``.

    Weights must be positive unless ``allow_zero`` is set; zero weights are
    meant for audit-only weightings and are rejected by :func:`counting_bound`.
    """

    graph: Graph
    weights: Mapping[Edge, int]
    allow_zero: bool = False

    def __post_init__(self) -> None:
        floor = 0 if self.allow_zero else 1
        edges = set(self.graph.edges)
        for e, wt in self.weights.items():
            if e not in edges:
                raise GraphError(f"weight given for non-edge {e}")
            if not isinstance(wt, int) or wt < floor:
                raise GraphError(f"weight of {e} must be an integer >= {floor}, got {wt!r}")
        missing = edges.difference(self.weights)
        if missing:
            raise GraphError(f"{len(missing)} edges have no weight, e.g. {min(missing)}")

    @classmethod
    def uniform(cls, g: Graph, value: int = 1) -> EdgeWeighting:
        return cls(g, {e: value for e in g.edges}, allow_zero=value == 0)

    def __getitem__(self, e: Edge) -> int:
        return self.weights[norm_edge(*e)]

    @property
    def total(self) -> int:
        return sum(self.weights.values())

    @property
    def min_weight(self) -> int:
        return min(self.weights.values())

    def restrict(self, h: Graph) -> EdgeWeighting:
        """The same weights on a subgraph ``h`` of the host graph."""
        return EdgeWeighting(h, {e: self[e] for e in h.edges}, self.allow_zero)

    def scaled(self, c: int) -> EdgeWeighting:
        return EdgeWeighting(self.graph, {e: c * wt for e, wt in self.weights.items()}, self.allow_zero)


def paper_weighting_q(s: int, k: int) -> EdgeWeighting:
    """Rim edges weigh 2, spokes weigh ``k - 2``; the total is ``s k^2``."""
    check_q(s, k)
    if k < 4:
        raise FamilyError(f"the Q_s(k) weighting needs k >= 4 so that spokes weigh >= 2, got k={k}")
    g = q_graph(s, k)
    return EdgeWeighting(g, {e: 2 if is_rim_edge(s, k, e) else k - 2 for e in g.edges})


def _check_p_odd(k: int) -> None:
    if k < 9 or k % 2 == 0:
        raise FamilyError(f"the P(4k, k) weighting needs odd k >= 9, got k={k}")


def paper_weighting_p(k: int) -> EdgeWeighting:
    """On P(4k, k): rim 4, spoke ``k - 3``, inner ``2k - 2``; total ``4k(3k - 1)``."""
    _check_p_odd(k)
    n = 4 * k
    g = petersen(n, k)
    by_kind = {"rim": 4, "spoke": k - 3, "inner": 2 * k - 2}
    return EdgeWeighting(g, {e: by_kind[petersen_edge_kind(n, e)] for e in g.edges})


def paper_weighting_p_prime(k: int) -> EdgeWeighting:
    """On P(4k, k): rim 0, spoke 1, inner 2; total ``12k``."""
    if k < 1:
        raise FamilyError(f"k must be positive, got k={k}")
    n = 4 * k
    g = petersen(n, k)
    by_kind = {"rim": 0, "spoke": 1, "inner": 2}
    return EdgeWeighting(g, {e: by_kind[petersen_edge_kind(n, e)] for e in g.edges}, allow_zero=True)


# ---------------------------------------------------------------------------
# Weighted girth
# ---------------------------------------------------------------------------


def _weighted_adjacency(w: EdgeWeighting) -> list[list[tuple[int, int]]]:
    g = w.graph
    adj: list[list[tuple[int, int]]] = [[] for _ in g.vertices()]
    for e, wt in sorted(w.weights.items()):
        a, b = e
        adj[a].append((b, wt))
        adj[b].append((a, wt))
    return adj


def _shortest_path_avoiding(
    adj: list[list[tuple[int, int]]], src: int, dst: int, limit: int
) -> tuple[int, list[int]] | None:
    """Cheapest ``src``-``dst`` path not using edge ``src dst``, if cheaper than ``limit``."""
    dist = {src: 0}
    parent = {src: -1}
    heap = [(0, src)]
    while heap:
        d, x = heapq.heappop(heap)
        if d > dist[x]:
            continue
        if d >= limit:
            return None
        if x == dst:
            path = [dst]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            return d, path[::-1]
        for y, wt in adj[x]:
            if x == src and y == dst:
                continue
            nd = d + wt
            if nd < dist.get(y, limit):
                dist[y] = nd
                parent[y] = x
                heapq.heappush(heap, (nd, y))
    return None


@dataclass(frozen=True)
class WeightedGirth:
    weight: int
    cycle: Cycle


def weighted_girth(w: EdgeWeighting) -> WeightedGirth:
    """Minimum cycle weight, with one cycle attaining it (canonical form).

    For each edge ``ab`` the cheapest cycle through it is ``w(ab)`` plus the
    cheapest ``a``-``b`` path avoiding ``ab``; the answer is the minimum over
    edges. Dijkstra stops early once it cannot beat the best cycle so far.
    """
    adj = _weighted_adjacency(w)
    best: WeightedGirth | None = None
    for e in w.graph.edges:
        a, b = e
        limit = (best.weight if best else sum(w.weights.values()) + 1) - w[e]
        if limit <= 0:
            continue
        found = _shortest_path_avoiding(adj, a, b, limit)
        if found is not None:
            d, path = found
            best = WeightedGirth(d + w[e], canonical_cycle(path))
    if best is None:
        raise GraphError("graph is a forest; weighted girth is undefined")
    return best


# ---------------------------------------------------------------------------
# Counting bound
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SkewnessCertificate:
    """Lower bound on skewness from the counting inequality, with its trace.

    ``numerator``, ``denominator`` and ``ratio`` describe the instantiated
    inequality ``t >= numerator / denominator``; they are ``None`` only when a
    planar input has no cycle to measure.
    """

    vertex_count: int
    edge_count: int
    total_weight: int
    min_edge_weight: int
    weighted_girth: int | None
    numerator: int | None
    denominator: int | None
    ratio: Fraction | None
    bound: int
    planar: bool
    assumption: str = ASSUMPTION

    def to_record(self) -> dict[str, object]:
        return {
            "W": self.total_weight,
            "w_min": self.min_edge_weight,
            "girth": self.weighted_girth,
            "V": self.vertex_count,
            "E": self.edge_count,
            "numerator": self.numerator,
            "denominator": self.denominator,
            "bound": self.bound,
            "assumption": self.assumption,
        }

    def format_text(self) -> str:
        lines = [
            f"V = {self.vertex_count}",
            f"E = {self.edge_count}",
            f"W = {self.total_weight}",
            f"w_min = {self.min_edge_weight}",
            f"weighted girth g = {self.weighted_girth}",
        ]
        if self.planar:
            lines.append("graph is planar: bound = 0")
        else:
            g, wmin = self.weighted_girth, self.min_edge_weight
            lines.append(
                f"t >= (g(E-V+2) - 2W) / (g - 2 w_min) = "
                f"({g}*{self.edge_count - self.vertex_count + 2} - {2 * self.total_weight}) / "
                f"({g} - {2 * wmin}) = {self.numerator}/{self.denominator}"
            )
            lines.append(f"bound = {self.bound}")
        lines.append(f"assumption: {self.assumption}")
        return "\n".join(lines) + "\n"


def counting_bound(w: EdgeWeighting) -> SkewnessCertificate:
    g = w.graph
    if w.allow_zero and w.min_weight == 0:
        raise CertificateError("counting bound needs strictly positive weights")
    planar = is_planar(g)
    if not planar and not is_connected(g):
        raise CertificateError("counting bound is stated for connected graphs")
    W, wmin = w.total, w.min_weight
    try:
        gw: int | None = weighted_girth(w).weight
    except GraphError:
        gw = None
    numerator = denominator = None
    ratio = None
    bound = 0
    if gw is not None:
        denominator = gw - 2 * wmin
        if denominator <= 0 and not planar:
            raise CertificateError(
                f"inequality degenerate: weighted girth {gw} <= 2 * w_min = {2 * wmin}"
            )
        numerator = gw * (g.edge_count - g.vertex_count + 2) - 2 * W
        if denominator > 0:
            ratio = Fraction(numerator, denominator)
            if not planar and numerator > 0:
                bound = ceil_div(numerator, denominator)
        else:
            numerator = denominator = None
    return SkewnessCertificate(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        total_weight=W,
        min_edge_weight=wmin,
        weighted_girth=gw,
        numerator=numerator,
        denominator=denominator,
        ratio=ratio,
        bound=bound,
        planar=planar,
    )


# ---------------------------------------------------------------------------
# Cycle enumeration
# ---------------------------------------------------------------------------


def canonical_cycle(seq: Sequence[int]) -> Cycle:
    """Least rotation/reflection of a cycle's vertex sequence."""
    if len(seq) < 3 or len(set(seq)) != len(seq):
        raise GraphError(f"not a simple cycle: {tuple(seq)}")
    i = seq.index(min(seq))
    rot = tuple(seq[i:]) + tuple(seq[:i])
    rev = (rot[0],) + rot[:0:-1]
    return min(rot, rev)


def cycle_edges(cycle: Sequence[int]) -> frozenset[Edge]:
    return frozenset(norm_edge(cycle[i - 1], cycle[i]) for i in range(len(cycle)))


def cycle_weight(cycle: Sequence[int], w: EdgeWeighting) -> int:
    return sum(w[e] for e in cycle_edges(cycle))


def _distances_from(adj: list[list[tuple[int, int]]], s: int) -> list[float]:
    """Weighted distances from ``s`` using only vertices ``>= s``."""
    dist = [float("inf")] * len(adj)
    dist[s] = 0
    heap = [(0, s)]
    while heap:
        d, x = heapq.heappop(heap)
        if d > dist[x]:
            continue
        for y, wt in adj[x]:
            if y >= s and d + wt < dist[y]:
                dist[y] = d + wt
                heapq.heappush(heap, (d + wt, y))
    return dist


def _cycles_rooted_at(adj: list[list[tuple[int, int]]], roots: Sequence[int], budget: int) -> list[Cycle]:
    """Cycles of weight <= budget whose least vertex is one of ``roots``."""
    out: list[Cycle] = []
    for s in roots:
        dist = _distances_from(adj, s)
        path = [s]
        on_path = {s}

        def extend(x: int, weight: int) -> None:
            for y, wt in adj[x]:
                nw = weight + wt
                if y == s:
                    # emit each cycle once: second vertex below the last
                    if len(path) >= 3 and nw <= budget and path[1] < path[-1]:
                        out.append(tuple(path))
                elif y > s and y not in on_path and nw + dist[y] <= budget:
                    path.append(y)
                    on_path.add(y)
                    extend(y, nw)
                    path.pop()
                    on_path.discard(y)

        extend(s, 0)
    return out


def enumerate_min_cycles(w: EdgeWeighting, budget: int, workers: int = 1) -> list[Cycle]:
    """Every simple cycle of weight ``<= budget``, canonical and sorted.

    Each cycle is found only from its least vertex, by a depth-first search
    pruned with weighted distances back to that vertex. ``workers > 1``
    splits the roots across processes; the merged output does not depend on
    the split.
    """
    adj = _weighted_adjacency(w)
    roots = list(w.graph.vertices())
    if workers <= 1 or len(roots) < 2:
        cycles = _cycles_rooted_at(adj, roots, budget)
    else:
        chunks = [roots[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_cycles_rooted_at, [adj] * workers, chunks, [budget] * workers)
            cycles = [c for part in parts for c in part]
    return sorted(cycles)


# ---------------------------------------------------------------------------
# Minimum cycles of P(4k, k)
# ---------------------------------------------------------------------------


class CycleType(str, Enum):
    TYPE_I = "I"
    TYPE_II_III = "II/III"
    TYPE_IV = "IV"
    OTHER = "other"


@dataclass(frozen=True)
class CycleClass:
    kind: CycleType
    anchor: int | None = None


def template_type_i(k: int, i: int) -> frozenset[Edge]:
    """u_i u_{i+1} .. u_{i+k} v_{i+k} v_i."""
    n = 4 * k
    return cycle_edges([u(n, i + j) for j in range(k + 1)] + [v(n, i + k), v(n, i)])


def template_type_ii(k: int, i: int) -> frozenset[Edge]:
    """u_i u_{i+1} v_{i+1} v_{i+k+1} u_{i+k+1} u_{i+k} v_{i+k} v_i."""
    n = 4 * k
    return cycle_edges(
        [u(n, i), u(n, i + 1), v(n, i + 1), v(n, i + k + 1),
         u(n, i + k + 1), u(n, i + k), v(n, i + k), v(n, i)]
    )


def template_type_iii(k: int, i: int) -> frozenset[Edge]:
    """u_i u_{i+1} v_{i+1} v_{i-k+1} u_{i-k+1} u_{i-k} v_{i-k} v_i."""
    n = 4 * k
    return cycle_edges(
        [u(n, i), u(n, i + 1), v(n, i + 1), v(n, i - k + 1),
         u(n, i - k + 1), u(n, i - k), v(n, i - k), v(n, i)]
    )


def template_type_iv(k: int, i: int) -> frozenset[Edge]:
    """v_i v_{i+k} v_{i+2k} v_{i+3k}."""
    n = 4 * k
    return cycle_edges([v(n, i + j * k) for j in range(4)])


def type_ii_iii_shift(k: int) -> int | None:
    """Index shift ``d`` with type-(iii) at ``i`` equal to type-(ii) at ``i + d`` for
    every ``i``, found by trying all shifts; ``None`` if the families differ."""
    n = 4 * k
    iii = [template_type_iii(k, i) for i in range(n)]
    for d in range(n):
        if all(iii[i] == template_type_ii(k, i + d) for i in range(n)):
            return d
    return None


def cycle_templates(k: int) -> dict[frozenset[Edge], CycleClass]:
    """Edge set of every template cycle of P(4k, k), keyed to its class.

    Type (iii) cycles coincide with type (ii) cycles (checked by
    :func:`type_ii_iii_shift`), so they share one class anchored at the
    type-(ii) index.
    """
    n = 4 * k
    table: dict[frozenset[Edge], CycleClass] = {}
    for i in range(k):
        table[template_type_iv(k, i)] = CycleClass(CycleType.TYPE_IV, i)
    for i in range(n):
        table[template_type_ii(k, i)] = CycleClass(CycleType.TYPE_II_III, i)
        table[template_type_i(k, i)] = CycleClass(CycleType.TYPE_I, i)
    return table


def classify_cycle(cycle: Sequence[int], k: int, templates: Mapping[frozenset[Edge], CycleClass] | None = None) -> CycleClass:
    """Exact edge-set match against the templates; anything else is ``OTHER``."""
    if templates is None:
        templates = cycle_templates(k)
    return templates.get(cycle_edges(cycle), CycleClass(CycleType.OTHER))


# ---------------------------------------------------------------------------
# Face audit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FaceAudit:
    face_weights: tuple[int, ...]
    face_total: int
    edge_total: int

    @property
    def identity_holds(self) -> bool:
        return self.face_total == 2 * self.edge_total

    def count_of(self, weight: int) -> int:
        return sum(1 for x in self.face_weights if x == weight)


def face_weight_audit(emb: PlanarEmbedding, w: EdgeWeighting) -> FaceAudit:
    """Weight of each boundary walk (bridges twice) and the two-sides identity."""
    if w.graph.edges != emb.graph.edges:
        raise GraphError("weighting and embedding are on different graphs")
    weights = tuple(sum(w[e] for e in emb.face_edges(i)) for i in range(len(emb.faces)))
    audit = FaceAudit(weights, sum(weights), w.total)
    if not audit.identity_holds:
        raise AuditError(f"face weights sum to {audit.face_total}, expected 2 * {audit.edge_total}")
    return audit


def solve_face_split(faces: int, small: int, large: int, doubled_total: int) -> Fraction:
    """``x`` in ``small * x + large * (faces - x) = doubled_total``."""
    if small == large:
        raise CertificateError("face weights must differ to split the face count")
    return Fraction(large * faces - doubled_total, large - small)


def type_i_face_count(k: int) -> Fraction:
    """Solve ``4x + 8(3k + 1 - x) = 2 * 12k`` for ``x``."""
    return solve_face_split(3 * k + 1, 4, 8, 2 * 12 * k)


# ---------------------------------------------------------------------------
# Good and bad rim vertices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BadVertexReport:
    n: int
    bad: tuple[int, ...]
    runs: tuple[tuple[int, int], ...]
    removed_count: int
    independent_rim: bool

    @property
    def longest_run(self) -> int:
        return max((length for _, length in self.runs), default=0)

    @property
    def predicted_bad(self) -> int | None:
        """``2 |removed|`` when the removals are independent rim edges."""
        return 2 * self.removed_count if self.independent_rim else None


def bad_vertex_runs(g: Graph, removed: Iterable[Edge]) -> BadVertexReport:
    """Mark rim vertices ``u_i`` touching a removed edge and find circular bad runs.

    ``runs`` lists ``(start, length)`` for each maximal circular run, by start.
    """
    n = g.vertex_count // 2
    removed = sorted({norm_edge(*e) for e in removed})
    for e in removed:
        if not g.has_edge(*e):
            raise GraphError(f"{e} is not an edge")
    flags = [False] * n
    for a, b in removed:
        for x in (a, b):
            if x < n:
                flags[x] = True
    touched = [x for e in removed for x in e]
    independent = all(petersen_edge_kind(n, e) == "rim" for e in removed) and len(set(touched)) == len(touched)
    bad = tuple(i for i in range(n) if flags[i])
    runs: list[tuple[int, int]] = []
    if len(bad) == n:
        runs.append((0, n))
    elif bad:
        for i in range(n):
            if flags[i] and not flags[i - 1]:
                length = 0
                while flags[(i + length) % n]:
                    length += 1
                runs.append((i, length))
    return BadVertexReport(n, bad, tuple(runs), len(removed), independent)
