# cython: language_level=3
"""Left-right planarity test, compiled kernel.

Mirrors the orientation and testing phases of ``_lr_py`` on flat C arrays.
One workspace is allocated per public call and reused across the repeated
tests made by ``minimize_nonplanar`` and ``greedy_planar``.
"""

from libc.stdlib cimport free, malloc

cdef enum:
    NONE = -1


cdef struct Work:
    int n
    int m
    int* us
    int* vs
    int* adj_start
    int* adj_nbr
    int* adj_edge
    int* fill
    int* out_cnt
    int* out_edge
    int* src
    int* dst
    int* height
    int* parent_edge
    int* lowpt
    int* lowpt2
    int* nesting
    int* ref
    int* lowpt_edge
    int* stack_bottom
    int* S
    int sp
    int* roots
    int nroots
    int* fv
    int* fi
    int* fe


cdef int* _ints(Py_ssize_t count) except NULL:
    cdef int* p = <int*> malloc((count if count > 0 else 1) * sizeof(int))
    if p == NULL:
        raise MemoryError()
    return p


cdef Work* _alloc(int n, int m) except NULL:
    cdef Work* w = <Work*> malloc(sizeof(Work))
    if w == NULL:
        raise MemoryError()
    w.n = n
    w.m = m
    w.us = _ints(m)
    w.vs = _ints(m)
    w.adj_start = _ints(n + 1)
    w.adj_nbr = _ints(2 * m)
    w.adj_edge = _ints(2 * m)
    w.fill = _ints(n)
    w.out_cnt = _ints(n)
    w.out_edge = _ints(2 * m)
    w.src = _ints(m)
    w.dst = _ints(m)
    w.height = _ints(n)
    w.parent_edge = _ints(n)
    w.lowpt = _ints(m)
    w.lowpt2 = _ints(m)
    w.nesting = _ints(m)
    w.ref = _ints(m)
    w.lowpt_edge = _ints(m)
    w.stack_bottom = _ints(m)
    w.S = _ints(4 * (m + 1))
    w.roots = _ints(n)
    w.fv = _ints(n + 1)
    w.fi = _ints(n + 1)
    w.fe = _ints(n + 1)
    return w


cdef void _release(Work* w):
    free(w.us); free(w.vs)
    free(w.adj_start); free(w.adj_nbr); free(w.adj_edge); free(w.fill)
    free(w.out_cnt); free(w.out_edge)
    free(w.src); free(w.dst); free(w.height); free(w.parent_edge)
    free(w.lowpt); free(w.lowpt2); free(w.nesting)
    free(w.ref); free(w.lowpt_edge); free(w.stack_bottom); free(w.S)
    free(w.roots); free(w.fv); free(w.fi); free(w.fe)
    free(w)


cdef inline int _imin(int a, int b) nogil:
    return a if a < b else b


cdef void _finish(Work* w, int v, int e) nogil:
    cdef int pe
    w.nesting[e] = 2 * w.lowpt[e] + (1 if w.lowpt2[e] < w.height[v] else 0)
    pe = w.parent_edge[v]
    if pe == NONE:
        return
    if w.lowpt[e] < w.lowpt[pe]:
        w.lowpt2[pe] = _imin(w.lowpt[pe], w.lowpt2[e])
        w.lowpt[pe] = w.lowpt[e]
    elif w.lowpt[e] > w.lowpt[pe]:
        w.lowpt2[pe] = _imin(w.lowpt2[pe], w.lowpt[e])
    else:
        w.lowpt2[pe] = _imin(w.lowpt2[pe], w.lowpt2[e])


cdef void _orient(Work* w, int m) nogil:
    cdef int n = w.n
    cdef int v, i, x, e, root, sp, pe, j, key, k, a, b
    for v in range(n + 1):
        w.adj_start[v] = 0
    for e in range(m):
        w.adj_start[w.us[e] + 1] += 1
        w.adj_start[w.vs[e] + 1] += 1
    for v in range(n):
        w.adj_start[v + 1] += w.adj_start[v]
    for v in range(n):
        w.fill[v] = w.adj_start[v]
        w.out_cnt[v] = 0
        w.height[v] = NONE
        w.parent_edge[v] = NONE
    for e in range(m):
        a = w.us[e]
        b = w.vs[e]
        w.adj_nbr[w.fill[a]] = b
        w.adj_edge[w.fill[a]] = e
        w.fill[a] += 1
        w.adj_nbr[w.fill[b]] = a
        w.adj_edge[w.fill[b]] = e
        w.fill[b] += 1
        w.src[e] = NONE
        w.dst[e] = NONE
    w.nroots = 0
    for root in range(n):
        if w.height[root] != NONE:
            continue
        w.roots[w.nroots] = root
        w.nroots += 1
        w.height[root] = 0
        sp = 0
        w.fv[0] = root
        w.fi[0] = 0
        while sp >= 0:
            v = w.fv[sp]
            i = w.fi[sp]
            if i < w.adj_start[v + 1] - w.adj_start[v]:
                w.fi[sp] = i + 1
                x = w.adj_nbr[w.adj_start[v] + i]
                e = w.adj_edge[w.adj_start[v] + i]
                if w.src[e] != NONE:
                    continue
                w.src[e] = v
                w.dst[e] = x
                w.out_edge[w.adj_start[v] + w.out_cnt[v]] = e
                w.out_cnt[v] += 1
                w.lowpt[e] = w.height[v]
                w.lowpt2[e] = w.height[v]
                if w.height[x] == NONE:
                    w.parent_edge[x] = e
                    w.height[x] = w.height[v] + 1
                    sp += 1
                    w.fv[sp] = x
                    w.fi[sp] = 0
                    continue
                w.lowpt[e] = w.height[x]
                _finish(w, v, e)
            else:
                sp -= 1
                pe = w.parent_edge[v]
                if pe != NONE:
                    _finish(w, w.src[pe], pe)
    # stable insertion sort of each out-list by nesting depth
    for v in range(n):
        a = w.adj_start[v]
        for j in range(1, w.out_cnt[v]):
            e = w.out_edge[a + j]
            key = w.nesting[e]
            k = j - 1
            while k >= 0 and w.nesting[w.out_edge[a + k]] > key:
                w.out_edge[a + k + 1] = w.out_edge[a + k]
                k -= 1
            w.out_edge[a + k + 1] = e


cdef inline bint _empty(int low, int high) nogil:
    return low == NONE and high == NONE


cdef inline bint _conflicting(Work* w, int low, int high, int b) nogil:
    if low == NONE and high == NONE:
        return False
    return high != NONE and w.lowpt[high] > w.lowpt[b]


cdef inline int _lowest(Work* w, int* p) nogil:
    if _empty(p[0], p[1]):
        return w.lowpt[p[2]]
    if _empty(p[2], p[3]):
        return w.lowpt[p[0]]
    return _imin(w.lowpt[p[0]], w.lowpt[p[2]])


cdef inline void _swap(int* q) nogil:
    cdef int t0 = q[0]
    cdef int t1 = q[1]
    q[0] = q[2]
    q[1] = q[3]
    q[2] = t0
    q[3] = t1


cdef bint _add_constraints(Work* w, int ei, int e) nogil:
    cdef int p[4]
    cdef int q[4]
    cdef int* top
    p[0] = NONE
    p[1] = NONE
    p[2] = NONE
    p[3] = NONE
    while True:
        w.sp -= 1
        top = w.S + 4 * w.sp
        q[0] = top[0]
        q[1] = top[1]
        q[2] = top[2]
        q[3] = top[3]
        if not _empty(q[0], q[1]):
            _swap(q)
        if not _empty(q[0], q[1]):
            return False
        if w.lowpt[q[2]] > w.lowpt[e]:
            if _empty(p[2], p[3]):
                p[2] = q[2]
                p[3] = q[3]
            else:
                w.ref[p[2]] = q[3]
            p[2] = q[2]
        else:
            w.ref[q[2]] = w.lowpt_edge[e]
        if w.sp == w.stack_bottom[ei]:
            break
    while w.sp > 0:
        top = w.S + 4 * (w.sp - 1)
        if not (_conflicting(w, top[0], top[1], ei) or _conflicting(w, top[2], top[3], ei)):
            break
        w.sp -= 1
        q[0] = top[0]
        q[1] = top[1]
        q[2] = top[2]
        q[3] = top[3]
        if _conflicting(w, q[2], q[3], ei):
            _swap(q)
        if _conflicting(w, q[2], q[3], ei):
            return False
        if p[2] != NONE:
            w.ref[p[2]] = q[3]
        if q[2] != NONE:
            p[2] = q[2]
        if _empty(p[0], p[1]):
            p[0] = q[0]
            p[1] = q[1]
        elif p[0] != NONE:
            w.ref[p[0]] = q[1]
        p[0] = q[0]
    if not (_empty(p[0], p[1]) and _empty(p[2], p[3])):
        top = w.S + 4 * w.sp
        top[0] = p[0]
        top[1] = p[1]
        top[2] = p[2]
        top[3] = p[3]
        w.sp += 1
    return True


cdef void _remove_back_edges(Work* w, int e) nogil:
    cdef int u = w.src[e]
    cdef int hu = w.height[u]
    cdef int* p
    cdef int hl, hr
    while w.sp > 0 and _lowest(w, w.S + 4 * (w.sp - 1)) == hu:
        w.sp -= 1
    if w.sp > 0:
        p = w.S + 4 * (w.sp - 1)
        while p[1] != NONE and w.dst[p[1]] == u:
            p[1] = w.ref[p[1]]
        if p[1] == NONE and p[0] != NONE:
            w.ref[p[0]] = p[2]
            p[0] = NONE
        while p[3] != NONE and w.dst[p[3]] == u:
            p[3] = w.ref[p[3]]
        if p[3] == NONE and p[2] != NONE:
            w.ref[p[2]] = p[0]
            p[2] = NONE
    if w.lowpt[e] < hu:
        if w.sp > 0:
            p = w.S + 4 * (w.sp - 1)
            hl = p[1]
            hr = p[3]
        else:
            hl = NONE
            hr = NONE
        if hl != NONE and (hr == NONE or w.lowpt[hl] > w.lowpt[hr]):
            w.ref[e] = hl
        else:
            w.ref[e] = hr


cdef bint _test(Work* w, int m) nogil:
    cdef int r, root, fsp, v, i, ei, x, e, *top
    for e in range(m):
        w.ref[e] = NONE
        w.lowpt_edge[e] = NONE
    w.sp = 0
    for r in range(w.nroots):
        root = w.roots[r]
        fsp = 0
        w.fv[0] = root
        w.fi[0] = 0
        w.fe[0] = 0
        while fsp >= 0:
            v = w.fv[fsp]
            i = w.fi[fsp]
            if i < w.out_cnt[v]:
                ei = w.out_edge[w.adj_start[v] + i]
                x = w.dst[ei]
                if not w.fe[fsp]:
                    w.stack_bottom[ei] = w.sp
                    if w.parent_edge[x] == ei:
                        w.fe[fsp] = 1
                        fsp += 1
                        w.fv[fsp] = x
                        w.fi[fsp] = 0
                        w.fe[fsp] = 0
                        continue
                    w.lowpt_edge[ei] = ei
                    top = w.S + 4 * w.sp
                    top[0] = NONE
                    top[1] = NONE
                    top[2] = ei
                    top[3] = ei
                    w.sp += 1
                if w.lowpt[ei] < w.height[v]:
                    e = w.parent_edge[v]
                    if i == 0:
                        w.lowpt_edge[e] = w.lowpt_edge[ei]
                    elif not _add_constraints(w, ei, e):
                        return False
                w.fi[fsp] = i + 1
                w.fe[fsp] = 0
            else:
                fsp -= 1
                e = w.parent_edge[v]
                if e != NONE:
                    _remove_back_edges(w, e)
    return True


cdef bint _planar(Work* w, int m) nogil:
    if w.n >= 3 and m > 3 * w.n - 6:
        return False
    _orient(w, m)
    return _test(w, m)


cdef void _load(Work* w, us, vs, int m) except *:
    cdef int e, a, b
    for e in range(m):
        a = us[e]
        b = vs[e]
        if a < 0 or a >= w.n or b < 0 or b >= w.n:
            raise ValueError(f"edge ({a}, {b}) out of range for {w.n} vertices")
        w.us[e] = a
        w.vs[e] = b


def is_planar(int n, us, vs):
    """True iff the simple graph on ``n`` vertices with edges ``(us[i], vs[i])`` is planar."""
    cdef int m = len(us)
    cdef Work* w = _alloc(n, m)
    cdef bint result
    try:
        _load(w, us, vs, m)
        with nogil:
            result = _planar(w, m)
    finally:
        _release(w)
    return bool(result)


def minimize_nonplanar(int n, us, vs, order):
    """Greedy one-pass edge removal keeping the graph nonplanar.

    Same contract as the pure-Python kernel: returns the surviving edge
    indices in ascending order and the number of planarity tests spent.
    """
    cdef int m = len(us)
    cdef Work* w = _alloc(n, m)
    cdef int* alive = _ints(m)
    cdef int* all_u = _ints(m)
    cdef int* all_v = _ints(m)
    cdef int i, j, cnt, idx
    cdef int tests = 0
    cdef list ord_list = [int(x) for x in order]
    cdef int olen = len(ord_list)
    cdef int* ordv = _ints(olen)
    try:
        _load(w, us, vs, m)
        for i in range(m):
            alive[i] = 1
            all_u[i] = w.us[i]
            all_v[i] = w.vs[i]
        for j in range(olen):
            idx = ord_list[j]
            if idx < 0 or idx >= m:
                raise ValueError(f"order index {idx} out of range")
            ordv[j] = idx
        with nogil:
            for j in range(olen):
                idx = ordv[j]
                if not alive[idx]:
                    continue
                alive[idx] = 0
                cnt = 0
                for i in range(m):
                    if alive[i]:
                        w.us[cnt] = all_u[i]
                        w.vs[cnt] = all_v[i]
                        cnt += 1
                tests += 1
                if _planar(w, cnt):
                    alive[idx] = 1
        kept = [i for i in range(m) if alive[i]]
    finally:
        free(alive)
        free(all_u)
        free(all_v)
        free(ordv)
        _release(w)
    return kept, tests


def greedy_planar(int n, us, vs, order):
    """Insert edges in ``order`` while the graph stays planar.

    Returns the kept edge indices (ascending) and the planarity tests spent.
    """
    cdef int m = len(us)
    cdef Work* w = _alloc(n, m)
    cdef int* all_u = _ints(m)
    cdef int* all_v = _ints(m)
    cdef int* kept_idx = _ints(m)
    cdef int i, j, idx, cnt
    cdef int tests = 0
    cdef list ord_list = [int(x) for x in order]
    cdef int olen = len(ord_list)
    cdef int* ordv = _ints(olen)
    try:
        _load(w, us, vs, m)
        for i in range(m):
            all_u[i] = w.us[i]
            all_v[i] = w.vs[i]
        for j in range(olen):
            idx = ord_list[j]
            if idx < 0 or idx >= m:
                raise ValueError(f"order index {idx} out of range")
            ordv[j] = idx
        cnt = 0
        with nogil:
            for j in range(olen):
                idx = ordv[j]
                for i in range(cnt):
                    w.us[i] = all_u[kept_idx[i]]
                    w.vs[i] = all_v[kept_idx[i]]
                w.us[cnt] = all_u[idx]
                w.vs[cnt] = all_v[idx]
                tests += 1
                if _planar(w, cnt + 1):
                    kept_idx[cnt] = idx
                    cnt += 1
        kept = sorted(kept_idx[i] for i in range(cnt))
    finally:
        free(all_u)
        free(all_v)
        free(kept_idx)
        free(ordv)
        _release(w)
    return kept, tests
