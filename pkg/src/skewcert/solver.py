"""Skewness: exact branch-and-bound, a brute-force oracle, and a greedy heuristic.

Every mode returns a :class:`SkewnessResult` whose deletion set has been
checked to leave a planar residual.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from skewcert.graph import Edge, Graph
from skewcert.planarity import _backend


class Status(str, Enum):
    OPTIMAL = "optimal"
    UPPER_BOUND = "upper_bound"
    UNRESOLVED = "unresolved"


@dataclass
class SolverStats:
    nodes: int = 0
    planarity_calls: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class SkewnessResult:
    """``value`` edges whose removal leaves ``graph`` planar.

    ``OPTIMAL`` means no smaller set exists and ``deletion_set`` is the
    lexicographically least optimal set unless ``canonical`` is false.
    ``UPPER_BOUND`` comes from the heuristic. ``UNRESOLVED`` means the node
    cap ran out: the true value lies in ``[lower_bound, value]``.
    """

    value: int
    deletion_set: tuple[Edge, ...]
    status: Status
    lower_bound: int
    stats: SolverStats = field(compare=False)
    canonical: bool = True

    @property
    def resolved(self) -> bool:
        return self.status is not Status.UNRESOLVED

    def to_record(self, timings: bool = True) -> dict[str, object]:
        record: dict[str, object] = {
            "value": self.value,
            "status": self.status.value,
            "lower_bound": self.lower_bound,
            "deletion_set": [list(e) for e in self.deletion_set],
            "canonical": self.canonical,
            "nodes": self.stats.nodes,
            "planarity_calls": self.stats.planarity_calls,
        }
        if timings:
            record["elapsed"] = round(self.stats.elapsed, 6)
        return record

    def _value_line(self) -> str:
        if self.status is Status.OPTIMAL:
            return f"skewness: {self.value}"
        if self.status is Status.UPPER_BOUND:
            return f"skewness <= {self.value}"
        return f"skewness in [{self.lower_bound}, {self.value}]"

    def format_text(self, g: Graph | None = None, timings: bool = True) -> str:
        names = [g.edge_label(e) if g is not None else f"{e[0]}-{e[1]}" for e in self.deletion_set]
        lines = [
            f"status: {self.status.value}",
            self._value_line(),
            f"deletion set ({len(names)}): {' '.join(names)}",
        ]
        if self.status is Status.OPTIMAL and not self.canonical:
            lines.append("note: deletion set is optimal but not the lexicographically least one")
        lines += [
            f"nodes: {self.stats.nodes}",
            f"planarity calls: {self.stats.planarity_calls}",
        ]
        if timings:
            lines.append(f"elapsed: {self.stats.elapsed:.3f}s")
        return "\n".join(lines) + "\n"


class _Edges:
    """Edge list of ``g`` addressed by position, with kernel helpers."""

    def __init__(self, g: Graph, stats: SolverStats) -> None:
        self.n = g.vertex_count
        self.edges = g.edges
        self.us = [a for a, _ in g.edges]
        self.vs = [b for _, b in g.edges]
        self.m = len(g.edges)
        self.stats = stats
        self.kernel = _backend.kernel

    def planar(self, alive: Sequence[int]) -> bool:
        self.stats.planarity_calls += 1
        return self.kernel.is_planar(self.n, [self.us[i] for i in alive], [self.vs[i] for i in alive])

    def witness(self, alive: Sequence[int], first: Sequence[int], last: Sequence[int]) -> frozenset[int]:
        """Minimal nonplanar subset of ``alive``; edges in ``first`` are dropped
        preferentially, so edges in ``last`` tend to remain."""
        pos = {e: j for j, e in enumerate(alive)}
        order = [pos[e] for e in first] + [pos[e] for e in last]
        kept, tests = self.kernel.minimize_nonplanar(
            self.n, [self.us[i] for i in alive], [self.vs[i] for i in alive], order
        )
        self.stats.planarity_calls += tests
        return frozenset(alive[j] for j in kept)

    def greedy(self, order: Sequence[int]) -> list[int]:
        kept, tests = self.kernel.greedy_planar(self.n, self.us, self.vs, list(order))
        self.stats.planarity_calls += tests
        return kept

    def deletion(self, idx: Sequence[int]) -> tuple[Edge, ...]:
        return tuple(self.edges[i] for i in sorted(idx))


def _verified(ctx: _Edges, deleted: Sequence[int]) -> tuple[Edge, ...]:
    gone = set(deleted)
    if not ctx.planar([i for i in range(ctx.m) if i not in gone]):
        raise AssertionError("deletion set leaves a nonplanar residual")
    return ctx.deletion(deleted)


# ---------------------------------------------------------------------------
# Brute force
# ---------------------------------------------------------------------------


def skewness_bruteforce(g: Graph, cap: int | None = None) -> SkewnessResult:
    """Try deletion sets of size 0, 1, 2, ... in lexicographic order; first planar wins."""
    start = time.perf_counter()
    stats = SolverStats()
    ctx = _Edges(g, stats)
    cap = ctx.m if cap is None else min(cap, ctx.m)
    everything = range(ctx.m)
    for size in range(cap + 1):
        if ctx.n >= 3 and ctx.m - size > 3 * ctx.n - 6:
            continue
        for combo in itertools.combinations(everything, size):
            stats.nodes += 1
            gone = set(combo)
            if ctx.planar([i for i in everything if i not in gone]):
                stats.elapsed = time.perf_counter() - start
                return SkewnessResult(size, ctx.deletion(combo), Status.OPTIMAL, size, stats)
    stats.elapsed = time.perf_counter() - start
    return SkewnessResult(ctx.m, g.edges, Status.UNRESOLVED, cap + 1, stats, canonical=False)


# ---------------------------------------------------------------------------
# Heuristic
# ---------------------------------------------------------------------------


def _greedy_upper_bound(
    ctx: _Edges, seed: int, restarts: int | None, time_budget: float | None, patience: int = 40
) -> list[int]:
    """Deletion set from greedy insertion (canonical order, then shuffled
    restarts), polished by :func:`_local_search`."""
    start = time.perf_counter()
    deadline = None if time_budget is None else start + time_budget
    best = sorted(set(range(ctx.m)) - set(ctx.greedy(range(ctx.m))))
    rng = random.Random(seed)
    tries = 0
    while best:
        if restarts is not None and tries >= restarts:
            break
        if deadline is not None and time.perf_counter() >= deadline:
            break
        tries += 1
        order = list(range(ctx.m))
        rng.shuffle(order)
        deleted = sorted(set(range(ctx.m)) - set(ctx.greedy(order)))
        if (len(deleted), deleted) < (len(best), best):
            best = deleted
    return _local_search(ctx, best, rng, deadline, patience)


def _local_search(
    ctx: _Edges, deleted: list[int], rng: random.Random, deadline: float | None, patience: int = 40
) -> list[int]:
    """Exchange moves on a maximal planar subgraph.

    Drop one kept edge and greedily re-insert deleted edges: two or more
    insertions shrink the deletion set; a single different insertion is a
    sideways move taken with probability 1/3 to leave plateaus. Stops after
    ``patience`` sweeps without improvement or at ``deadline``.
    """
    kept = sorted(set(range(ctx.m)) - set(deleted))
    deleted = sorted(deleted)
    stale = 0
    while deleted and stale < patience:
        if deadline is not None and time.perf_counter() >= deadline:
            break
        stale += 1
        order = kept[:]
        rng.shuffle(order)
        for f in order:
            base = [e for e in kept if e != f]
            candidates = deleted[:]
            rng.shuffle(candidates)
            added: list[int] = []
            for d in candidates:
                if ctx.planar(base + added + [d]):
                    added.append(d)
            if len(added) >= 2 or (len(added) == 1 and rng.random() < 1 / 3):
                if len(added) >= 2:
                    stale = 0
                kept = sorted(base + added)
                deleted = sorted(set(deleted).difference(added) | {f})
                break
    return deleted


def skewness_heuristic(
    g: Graph, time_budget: float = 1.0, seed: int = 0, restarts: int | None = None
) -> SkewnessResult:
    """Upper bound by greedy planar insertion, seeded restarts and exchange moves.

    With ``restarts`` set the run is a fixed amount of work, so the result
    depends only on ``seed``; otherwise restarts and exchanges share the
    ``time_budget`` in seconds.
    """
    start = time.perf_counter()
    stats = SolverStats()
    ctx = _Edges(g, stats)
    deleted = _greedy_upper_bound(ctx, seed, restarts, time_budget if restarts is None else None)
    euler = max(0, ctx.m - (3 * ctx.n - 6)) if ctx.n >= 3 else 0
    result = SkewnessResult(
        len(deleted), _verified(ctx, deleted), Status.UPPER_BOUND, euler, stats, canonical=False
    )
    stats.elapsed = time.perf_counter() - start
    return result


# ---------------------------------------------------------------------------
# Branch and bound
# ---------------------------------------------------------------------------


def _girth_edge_bound(n: int, alive: Sequence[int], us: Sequence[int], vs: Sequence[int]) -> int:
    """Edges that must go before ``alive`` can be planar, from Euler plus girth.

    A planar graph of girth ``γ`` on ``V >= 3`` non-isolated vertices has at
    most ``γ(V - 2)/(γ - 2)`` edges, and deleting edges never lowers girth.
    """
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in alive:
        adj[us[i]].append(vs[i])
        adj[vs[i]].append(us[i])
    verts = [x for x in range(n) if adj[x]]
    if len(verts) < 3:
        return 0
    best = 0
    dist = [-1] * n
    parent = [-1] * n
    for s in verts:
        for x in verts:
            dist[x] = -1
        dist[s] = 0
        parent[s] = -1
        frontier = [s]
        found = False
        while frontier and not found:
            nxt = []
            for x in frontier:
                if best and 2 * dist[x] + 1 >= best:
                    found = True
                    break
                for y in adj[x]:
                    if dist[y] == -1:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        nxt.append(y)
                    elif parent[x] != y:
                        length = dist[x] + dist[y] + 1
                        if not best or length < best:
                            best = length
            frontier = nxt
        if best == 3:
            break
    if not best:
        return 0
    limit = best * (len(verts) - 2) // (best - 2)
    return max(0, len(alive) - limit)


class _Search:
    """Depth-first hitting-set search over Kuratowski witnesses.

    A node is a pair (deleted, fixed): fixed edges may not be deleted below
    it. Its children come from a witness ``K`` with free edges
    ``f_1 < ... < f_r``: child ``i`` deletes ``f_i`` and fixes
    ``f_1 .. f_{i-1}``, so the children partition the feasible completions.
    """

    def __init__(self, ctx: _Edges, node_cap: int | None, extra_bound: int) -> None:
        self.ctx = ctx
        self.node_cap = node_cap
        self.extra_bound = extra_bound
        self.cache: list[frozenset[int]] = []
        self.exhausted = False

    def _tick(self) -> bool:
        self.ctx.stats.nodes += 1
        if self.node_cap is not None and self.ctx.stats.nodes > self.node_cap:
            self.exhausted = True
        return self.exhausted

    def _packing(self, gone: set[int], fixed: set[int]) -> tuple[int, frozenset[int] | None]:
        """Greedy count of intact cached witnesses with pairwise disjoint free
        edges, plus the intact witness with fewest free edges."""
        used: set[int] = set()
        count = 0
        smallest: frozenset[int] | None = None
        intact = [(len(k - fixed), k) for k in self.cache if not (k & gone)]
        intact.sort(key=lambda t: t[0])
        for nfree, k in intact:
            free = k - fixed
            if smallest is None:
                smallest = k
            if not free & used:
                used |= free
                count += 1
                if not free:
                    return 10**9, k
        return count, smallest

    def seed_witnesses(self) -> int:
        """Cache witnesses with pairwise disjoint edge sets; their number is a
        lower bound on the skewness."""
        ctx = self.ctx
        alive = list(range(ctx.m))
        count = 0
        while not ctx.planar(alive):
            k = ctx.witness(alive, alive, [])
            self.cache.append(k)
            count += 1
            alive = [i for i in alive if i not in k]
        return count

    def lower_bound(self, alive: list[int], gone: set[int], fixed: set[int]) -> tuple[int, frozenset[int] | None]:
        packing, witness = self._packing(gone, fixed)
        girth = _girth_edge_bound(self.ctx.n, alive, self.ctx.us, self.ctx.vs)
        return max(packing, girth), witness

    def solve(self, deleted: list[int], fixed: set[int], limit: int) -> list[int] | None:
        """A deletion set of size ``< limit`` extending ``deleted`` and avoiding
        ``fixed``, preferring smaller sets; ``None`` if none exists (or the cap hit)."""
        self.best: list[int] | None = None
        self.limit = limit
        self._dfs(list(deleted), set(fixed))
        return self.best

    def _dfs(self, deleted: list[int], fixed: set[int]) -> None:
        if self._tick():
            return
        ctx = self.ctx
        gone = set(deleted)
        alive = [i for i in range(ctx.m) if i not in gone]
        lb, witness = self.lower_bound(alive, gone, fixed)
        if max(len(deleted) + lb, self.extra_bound) >= self.limit:
            return
        if witness is None:
            if ctx.planar(alive):
                self.best = sorted(deleted)
                self.limit = len(deleted)
                return
            free_first = [i for i in alive if i not in fixed]
            witness = ctx.witness(alive, free_first, sorted(fixed & set(alive)))
            self.cache.append(witness)
            if len(deleted) + 1 >= self.limit:
                return
        free = sorted(witness - fixed)
        branch_fixed = set(fixed)
        for f in free:
            self._dfs(deleted + [f], branch_fixed)
            if self.exhausted:
                return
            branch_fixed = branch_fixed | {f}


def skewness_exact(
    g: Graph,
    budget: int | None = None,
    lower_bound: int = 0,
    canonical: bool = True,
    seed: int = 0,
) -> SkewnessResult:
    """Exact skewness by branch and bound on Kuratowski witnesses.

    ``budget`` caps the number of search nodes; running out yields status
    ``UNRESOLVED`` with valid lower and upper bounds. ``lower_bound`` is an
    externally proven bound (for example a counting certificate) used for
    pruning. With ``canonical`` the deletion set is the lexicographically
    least optimal one.
    """
    start = time.perf_counter()
    stats = SolverStats()
    ctx = _Edges(g, stats)
    everything = list(range(ctx.m))
    if ctx.planar(everything):
        stats.elapsed = time.perf_counter() - start
        return SkewnessResult(0, (), Status.OPTIMAL, 0, stats)

    incumbent = _greedy_upper_bound(ctx, seed, restarts=8, time_budget=None, patience=8)
    search = _Search(ctx, budget, lower_bound)
    disjoint = search.seed_witnesses()
    root_lb, _ = search.lower_bound(everything, set(), set())
    proven_lb = max(root_lb, disjoint, lower_bound)
    if len(incumbent) > proven_lb:
        better = search.solve([], set(), len(incumbent))
        if search.exhausted:
            stats.elapsed = time.perf_counter() - start
            return SkewnessResult(
                len(incumbent), _verified(ctx, incumbent), Status.UNRESOLVED,
                proven_lb, stats, canonical=False,
            )
        if better is not None:
            incumbent = better
    value = len(incumbent)

    is_canonical = False
    if canonical:
        chosen = _lex_least(ctx, search, incumbent)
        if chosen is not None:
            incumbent, is_canonical = chosen, True
    stats.elapsed = time.perf_counter() - start
    return SkewnessResult(
        value, _verified(ctx, incumbent), Status.OPTIMAL, value, stats, canonical=is_canonical
    )


def _lex_least(ctx: _Edges, search: _Search, solution: list[int]) -> list[int] | None:
    """Lexicographically least optimal deletion set, scanning edges in order.

    Edge ``e`` joins the answer when some optimal set contains everything
    chosen so far plus ``e`` and nothing rejected so far; ``solution`` is kept
    as such a set whenever one is known, which settles most edges for free.
    """
    value = len(solution)
    chosen: list[int] = []
    rejected: set[int] = set()
    current = sorted(solution)
    for e in range(ctx.m):
        if len(chosen) == value:
            break
        if e in current:
            chosen.append(e)
            continue
        found = search.solve(chosen + [e], rejected, value + 1)
        if search.exhausted:
            return None
        if found is not None:
            chosen.append(e)
            current = found
        else:
            rejected.add(e)
    return chosen
