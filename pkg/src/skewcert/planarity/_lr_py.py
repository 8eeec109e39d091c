"""Left-right planarity test, pure-Python kernel.

Works on raw edge arrays (``us[i]``, ``vs[i]``) so the compiled kernel in
``_lr_ext.pyx`` can mirror it line for line. Edge ids index every per-edge
array; ``-1`` stands for "no edge". The embedding phase lives here only.
"""

from __future__ import annotations

from typing import Sequence

NONE = -1


class LRState:
    def __init__(self, n: int, us: Sequence[int], vs: Sequence[int]) -> None:
        m = len(us)
        self.n = n
        self.m = m
        self.us = us
        self.vs = vs
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for e in range(m):
            a, b = us[e], vs[e]
            adj[a].append((b, e))
            adj[b].append((a, e))
        self.adj = adj
        self.src = [NONE] * m
        self.dst = [NONE] * m
        self.height = [NONE] * n
        self.parent_edge = [NONE] * n
        self.lowpt = [0] * m
        self.lowpt2 = [0] * m
        self.nesting = [0] * m
        self.roots: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n)]
        # phase 2
        self.ref = [NONE] * m
        self.side = [1] * m
        self.lowpt_edge = [NONE] * m
        self.stack_bottom = [0] * m
        self.S: list[list[int]] = []  # conflict pairs [L.low, L.high, R.low, R.high]

    # -- phase 1: orientation -------------------------------------------------

    def _finish(self, v: int, e: int) -> None:
        lowpt, lowpt2 = self.lowpt, self.lowpt2
        self.nesting[e] = 2 * lowpt[e] + (1 if lowpt2[e] < self.height[v] else 0)
        pe = self.parent_edge[v]
        if pe == NONE:
            return
        if lowpt[e] < lowpt[pe]:
            lowpt2[pe] = min(lowpt[pe], lowpt2[e])
            lowpt[pe] = lowpt[e]
        elif lowpt[e] > lowpt[pe]:
            lowpt2[pe] = min(lowpt2[pe], lowpt[e])
        else:
            lowpt2[pe] = min(lowpt2[pe], lowpt2[e])

    def orient(self) -> None:
        adj, src, dst, height = self.adj, self.src, self.dst, self.height
        parent_edge = self.parent_edge
        for root in range(self.n):
            if height[root] != NONE:
                continue
            self.roots.append(root)
            height[root] = 0
            stack = [[root, 0]]
            while stack:
                frame = stack[-1]
                v, i = frame
                if i < len(adj[v]):
                    frame[1] = i + 1
                    w, e = adj[v][i]
                    if src[e] != NONE:
                        continue
                    src[e] = v
                    dst[e] = w
                    self.out[v].append(e)
                    self.lowpt[e] = height[v]
                    self.lowpt2[e] = height[v]
                    if height[w] == NONE:
                        parent_edge[w] = e
                        height[w] = height[v] + 1
                        stack.append([w, 0])
                        continue
                    self.lowpt[e] = height[w]
                    self._finish(v, e)
                else:
                    stack.pop()
                    pe = parent_edge[v]
                    if pe != NONE:
                        self._finish(src[pe], pe)
        nesting = self.nesting
        for v in range(self.n):
            self.out[v].sort(key=nesting.__getitem__)

    # -- phase 2: testing -----------------------------------------------------

    def _conflicting(self, low: int, high: int, b: int) -> bool:
        if low == NONE and high == NONE:
            return False
        return high != NONE and self.lowpt[high] > self.lowpt[b]

    def _lowest(self, p: list[int]) -> int:
        lowpt = self.lowpt
        if p[0] == NONE and p[1] == NONE:
            return lowpt[p[2]]
        if p[2] == NONE and p[3] == NONE:
            return lowpt[p[0]]
        return min(lowpt[p[0]], lowpt[p[2]])

    def _add_constraints(self, ei: int, e: int) -> bool:
        S, ref, lowpt = self.S, self.ref, self.lowpt
        p = [NONE, NONE, NONE, NONE]
        while True:
            q = S.pop()
            if q[0] != NONE or q[1] != NONE:
                q[0], q[1], q[2], q[3] = q[2], q[3], q[0], q[1]
            if q[0] != NONE or q[1] != NONE:
                return False
            if lowpt[q[2]] > lowpt[e]:
                if p[2] == NONE and p[3] == NONE:
                    p[2], p[3] = q[2], q[3]
                else:
                    ref[p[2]] = q[3]
                p[2] = q[2]
            else:
                ref[q[2]] = self.lowpt_edge[e]
            if len(S) == self.stack_bottom[ei]:
                break
        while S and (
            self._conflicting(S[-1][0], S[-1][1], ei) or self._conflicting(S[-1][2], S[-1][3], ei)
        ):
            q = S.pop()
            if self._conflicting(q[2], q[3], ei):
                q[0], q[1], q[2], q[3] = q[2], q[3], q[0], q[1]
            if self._conflicting(q[2], q[3], ei):
                return False
            if p[2] != NONE:
                ref[p[2]] = q[3]
            if q[2] != NONE:
                p[2] = q[2]
            if p[0] == NONE and p[1] == NONE:
                p[0], p[1] = q[0], q[1]
            elif p[0] != NONE:
                ref[p[0]] = q[1]
            p[0] = q[0]
        if p[0] != NONE or p[1] != NONE or p[2] != NONE or p[3] != NONE:
            S.append(p)
        return True

    def _remove_back_edges(self, e: int) -> None:
        S, ref, side, dst, lowpt = self.S, self.ref, self.side, self.dst, self.lowpt
        u = self.src[e]
        hu = self.height[u]
        while S and self._lowest(S[-1]) == hu:
            p = S.pop()
            if p[0] != NONE:
                side[p[0]] = -1
        if S:
            p = S.pop()
            while p[1] != NONE and dst[p[1]] == u:
                p[1] = ref[p[1]]
            if p[1] == NONE and p[0] != NONE:
                ref[p[0]] = p[2]
                side[p[0]] = -1
                p[0] = NONE
            while p[3] != NONE and dst[p[3]] == u:
                p[3] = ref[p[3]]
            if p[3] == NONE and p[2] != NONE:
                ref[p[2]] = p[0]
                side[p[2]] = -1
                p[2] = NONE
            S.append(p)
        if lowpt[e] < hu:
            if S:
                hl, hr = S[-1][1], S[-1][3]
            else:
                hl = hr = NONE
            if hl != NONE and (hr == NONE or lowpt[hl] > lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr

    def test(self) -> bool:
        out, dst, height = self.out, self.dst, self.height
        parent_edge, lowpt = self.parent_edge, self.lowpt
        for root in self.roots:
            stack = [[root, 0, False]]
            while stack:
                frame = stack[-1]
                v, i, entered = frame
                edges = out[v]
                if i < len(edges):
                    ei = edges[i]
                    w = dst[ei]
                    if not entered:
                        self.stack_bottom[ei] = len(self.S)
                        if parent_edge[w] == ei:
                            frame[2] = True
                            stack.append([w, 0, False])
                            continue
                        self.lowpt_edge[ei] = ei
                        self.S.append([NONE, NONE, ei, ei])
                    if lowpt[ei] < height[v]:
                        e = parent_edge[v]
                        if i == 0:
                            self.lowpt_edge[e] = self.lowpt_edge[ei]
                        elif not self._add_constraints(ei, e):
                            return False
                    frame[1] = i + 1
                    frame[2] = False
                else:
                    stack.pop()
                    e = parent_edge[v]
                    if e != NONE:
                        self._remove_back_edges(e)
        return True

    # -- phase 3: embedding ---------------------------------------------------

    def _sign(self, e: int) -> int:
        ref, side = self.ref, self.side
        chain = []
        while ref[e] != NONE:
            chain.append(e)
            e = ref[e]
        s = side[e]
        for x in reversed(chain):
            side[x] *= s
            ref[x] = NONE
            s = side[x]
        return s

    def embedding(self) -> list[list[int]]:
        """Clockwise rotation of neighbours at every vertex (after ``test()``)."""
        dst, nesting = self.dst, self.nesting
        signed = [self._sign(e) * nesting[e] for e in range(self.m)]
        rot = _Rotation(self.n)
        for v in range(self.n):
            self.out[v].sort(key=signed.__getitem__)
            prev = NONE
            for e in self.out[v]:
                rot.add_cw(v, dst[e], prev)
                prev = dst[e]
        left_ref = [NONE] * self.n
        right_ref = [NONE] * self.n
        parent_edge, side = self.parent_edge, self.side
        for root in self.roots:
            stack = [[root, 0]]
            while stack:
                frame = stack[-1]
                v, i = frame
                if i >= len(self.out[v]):
                    stack.pop()
                    continue
                frame[1] = i + 1
                ei = self.out[v][i]
                w = dst[ei]
                if parent_edge[w] == ei:
                    rot.add_first(w, v)
                    left_ref[v] = w
                    right_ref[v] = w
                    stack.append([w, 0])
                elif side[ei] == 1:
                    rot.add_cw(w, v, right_ref[w])
                else:
                    rot.add_ccw(w, v, left_ref[w])
                    left_ref[w] = v
        return [rot.cyclic(v) for v in range(self.n)]


class _Rotation:
    """Doubly linked cyclic neighbour orders, one per vertex."""

    def __init__(self, n: int) -> None:
        self.cw: list[dict[int, int]] = [{} for _ in range(n)]
        self.ccw: list[dict[int, int]] = [{} for _ in range(n)]
        self.first = [NONE] * n

    def add_cw(self, v: int, w: int, ref: int) -> None:
        """Insert ``w`` directly clockwise after ``ref`` around ``v``."""
        cw, ccw = self.cw[v], self.ccw[v]
        if ref == NONE:
            cw[w] = ccw[w] = w
            self.first[v] = w
            return
        nxt = cw[ref]
        cw[ref] = w
        cw[w] = nxt
        ccw[nxt] = w
        ccw[w] = ref

    def add_ccw(self, v: int, w: int, ref: int) -> None:
        """Insert ``w`` directly counter-clockwise before ``ref`` around ``v``."""
        if ref == NONE:
            self.add_cw(v, w, NONE)
            return
        self.add_cw(v, w, self.ccw[v][ref])
        if self.first[v] == ref:
            self.first[v] = w

    def add_first(self, v: int, w: int) -> None:
        self.add_ccw(v, w, self.first[v])

    def cyclic(self, v: int) -> list[int]:
        start = self.first[v]
        if start == NONE:
            return []
        order = [start]
        cur = self.cw[v][start]
        while cur != start:
            order.append(cur)
            cur = self.cw[v][cur]
        return order


def _too_dense(n: int, m: int) -> bool:
    return n >= 3 and m > 3 * n - 6


def is_planar(n: int, us: Sequence[int], vs: Sequence[int]) -> bool:
    if _too_dense(n, len(us)):
        return False
    state = LRState(n, us, vs)
    state.orient()
    return state.test()


def rotation_system(n: int, us: Sequence[int], vs: Sequence[int]) -> list[list[int]] | None:
    """Clockwise neighbour order per vertex, or ``None`` if nonplanar."""
    if _too_dense(n, len(us)):
        return None
    state = LRState(n, us, vs)
    state.orient()
    if not state.test():
        return None
    return state.embedding()


def minimize_nonplanar(
    n: int, us: Sequence[int], vs: Sequence[int], order: Sequence[int]
) -> tuple[list[int], int]:
    """Greedy one-pass edge removal keeping the graph nonplanar.

    Tries to drop the edges in ``order`` one at a time; a drop is kept when
    the rest is still nonplanar. Returns the indices of the surviving edges
    (ascending) and the number of planarity tests spent.
    """
    alive = [True] * len(us)
    tests = 0
    for idx in order:
        if not alive[idx]:
            continue
        alive[idx] = False
        sub = [i for i in range(len(us)) if alive[i]]
        tests += 1
        if is_planar(n, [us[i] for i in sub], [vs[i] for i in sub]):
            alive[idx] = True
    return [i for i in range(len(us)) if alive[i]], tests


def greedy_planar(
    n: int, us: Sequence[int], vs: Sequence[int], order: Sequence[int]
) -> tuple[list[int], int]:
    """Insert edges in ``order``, keeping each one that leaves the graph planar.

    Returns the kept edge indices (ascending) and the planarity tests spent.
    """
    kept: list[int] = []
    tests = 0
    for idx in order:
        trial = kept + [idx]
        tests += 1
        if is_planar(n, [us[i] for i in trial], [vs[i] for i in trial]):
            kept = trial
    return sorted(kept), tests
