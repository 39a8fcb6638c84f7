# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: exact int64 crossing counting and the xyxy-free subset
search. Semantics are identical to untangle._pykernels; the dispatch layer
(untangle.kernels) guards coordinate magnitudes so the 128-bit intermediate
determinants cannot overflow.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef long long i128 "__int128"


cdef inline int _sgn(i128 v) nogil:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


cdef inline int _orient(long long ax, long long ay, long long bx, long long by,
                        long long cx, long long cy) nogil:
    cdef i128 abx = <i128>bx - <i128>ax
    cdef i128 aby = <i128>by - <i128>ay
    cdef i128 acx = <i128>cx - <i128>ax
    cdef i128 acy = <i128>cy - <i128>ay
    return _sgn(abx * acy - aby * acx)


cdef inline bint _on_closed(long long ax, long long ay, long long bx, long long by,
                            long long px, long long py) nogil:
    cdef long long lo = ax if ax < bx else bx
    cdef long long hi = ax if ax > bx else bx
    if px < lo or px > hi:
        return 0
    lo = ay if ay < by else by
    hi = ay if ay > by else by
    if py < lo or py > hi:
        return 0
    return 1


cdef inline bint _edges_cross(long long ax, long long ay, long long bx, long long by,
                              long long cx, long long cy, long long dx, long long dy) nogil:
    cdef int o1 = _orient(ax, ay, bx, by, cx, cy)
    cdef int o2 = _orient(ax, ay, bx, by, dx, dy)
    cdef int o3 = _orient(cx, cy, dx, dy, ax, ay)
    cdef int o4 = _orient(cx, cy, dx, dy, bx, by)
    if o1 != o2 and o3 != o4 and o1 * o2 <= 0 and o3 * o4 <= 0:
        return 1
    if o1 == 0 and _on_closed(ax, ay, bx, by, cx, cy):
        return 1
    if o2 == 0 and _on_closed(ax, ay, bx, by, dx, dy):
        return 1
    if o3 == 0 and _on_closed(cx, cy, dx, dy, ax, ay):
        return 1
    if o4 == 0 and _on_closed(cx, cy, dx, dy, bx, by):
        return 1
    return 0


cdef inline bint _shared_overlap(long long sx, long long sy, long long px, long long py,
                                 long long qx, long long qy) nogil:
    if _orient(sx, sy, px, py, qx, qy) != 0:
        return 0
    cdef i128 dot = (<i128>px - <i128>sx) * (<i128>qx - <i128>sx) \
        + (<i128>py - <i128>sy) * (<i128>qy - <i128>sy)
    return dot > 0


def count_crossings(xs, ys, eu, ev):
    cdef Py_ssize_t n = len(xs)
    cdef Py_ssize_t m = len(eu)
    cdef long long *X = <long long *>malloc(n * sizeof(long long))
    cdef long long *Y = <long long *>malloc(n * sizeof(long long))
    cdef int *U = <int *>malloc(m * sizeof(int))
    cdef int *V = <int *>malloc(m * sizeof(int))
    if X == NULL or Y == NULL or U == NULL or V == NULL:
        free(X); free(Y); free(U); free(V)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef int a, b, c, d, s, p, q
    cdef long long total = 0
    try:
        for i in range(n):
            X[i] = xs[i]
            Y[i] = ys[i]
        for i in range(m):
            U[i] = eu[i]
            V[i] = ev[i]
        with nogil:
            for i in range(m):
                a = U[i]; b = V[i]
                for j in range(i + 1, m):
                    c = U[j]; d = V[j]
                    if a == c or a == d or b == c or b == d:
                        if a == c:
                            s = a; p = b; q = d
                        elif a == d:
                            s = a; p = b; q = c
                        elif b == c:
                            s = b; p = a; q = d
                        else:
                            s = b; p = a; q = c
                        if _shared_overlap(X[s], Y[s], X[p], Y[p], X[q], Y[q]):
                            total += 1
                    else:
                        if _edges_cross(X[a], Y[a], X[b], Y[b], X[c], Y[c], X[d], Y[d]):
                            total += 1
            for i in range(n):
                for j in range(m):
                    a = U[j]; b = V[j]
                    if i != a and i != b:
                        if _orient(X[a], Y[a], X[b], Y[b], X[i], Y[i]) == 0 \
                                and _on_closed(X[a], Y[a], X[b], Y[b], X[i], Y[i]):
                            total += 1
        return total
    finally:
        free(X); free(Y); free(U); free(V)


DEF MAXN = 32
DEF MAXK = 32


cdef int _g_last[MAXK][MAXK]
cdef int _g_first[MAXK][MAXK]
cdef int _g_runs[MAXK][MAXK]
cdef int _g_lab[MAXN]
cdef int _g_chosen[MAXN]
cdef int _g_best_wit[MAXN]
cdef int _g_log_a[MAXN * MAXK]
cdef int _g_log_b[MAXN * MAXK]
cdef int _g_log_last[MAXN * MAXK]
cdef int _g_log_first[MAXN * MAXK]
cdef int _g_log_runs[MAXN * MAXK]
cdef int _g_n, _g_k, _g_best, _g_depth


cdef int _try_append(int t, int log_base) noexcept nogil:
    """Returns number of log entries written, or -1 if forbidden."""
    cdef int x, a, b, w = 0, idx
    for x in range(_g_k):
        if x == t:
            continue
        if x < t:
            a = x; b = t
        else:
            a = t; b = x
        if _g_last[a][b] == t:
            continue
        if _g_runs[a][b] + 1 >= 4:
            # revert entries written so far
            while w > 0:
                w -= 1
                idx = log_base + w
                _g_last[_g_log_a[idx]][_g_log_b[idx]] = _g_log_last[idx]
                _g_first[_g_log_a[idx]][_g_log_b[idx]] = _g_log_first[idx]
                _g_runs[_g_log_a[idx]][_g_log_b[idx]] = _g_log_runs[idx]
            return -1
        idx = log_base + w
        _g_log_a[idx] = a
        _g_log_b[idx] = b
        _g_log_last[idx] = _g_last[a][b]
        _g_log_first[idx] = _g_first[a][b]
        _g_log_runs[idx] = _g_runs[a][b]
        w += 1
        if _g_first[a][b] == -1:
            _g_first[a][b] = t
        _g_last[a][b] = t
        _g_runs[a][b] += 1
    return w


cdef void _undo(int log_base, int count) noexcept nogil:
    cdef int w = count, idx
    while w > 0:
        w -= 1
        idx = log_base + w
        _g_last[_g_log_a[idx]][_g_log_b[idx]] = _g_log_last[idx]
        _g_first[_g_log_a[idx]][_g_log_b[idx]] = _g_log_first[idx]
        _g_runs[_g_log_a[idx]][_g_log_b[idx]] = _g_log_runs[idx]


cdef bint _circular_free() noexcept nogil:
    cdef int x, y, r
    for x in range(_g_k):
        for y in range(x + 1, _g_k):
            r = _g_runs[x][y]
            if r >= 2 and _g_first[x][y] == _g_last[x][y]:
                r -= 1
            if r >= 4:
                return 0
    return 1


cdef void _dfs(int i) noexcept nogil:
    global _g_best, _g_depth
    cdef int w, j
    if _g_depth + (_g_n - i) <= _g_best:
        return
    if i == _g_n:
        if _circular_free():
            _g_best = _g_depth
            for j in range(_g_depth):
                _g_best_wit[j] = _g_chosen[j]
        return
    w = _try_append(_g_lab[i], _g_depth * MAXK)
    if w >= 0:
        _g_chosen[_g_depth] = i
        _g_depth += 1
        _dfs(i + 1)
        _g_depth -= 1
        _undo(_g_depth * MAXK, w)
    _dfs(i + 1)


def max_xyxy_free(labels):
    """labels must already be compressed to 0..k-1 with n <= 32, k <= 32."""
    global _g_n, _g_k, _g_best, _g_depth
    cdef Py_ssize_t n = len(labels)
    if n > MAXN:
        raise ValueError("compiled kernel supports at most %d elements" % MAXN)
    cdef int k = 0
    cdef Py_ssize_t i
    cdef int t
    for i in range(n):
        t = labels[i]
        if t < 0:
            raise ValueError("labels must be compressed to 0..k-1")
        _g_lab[i] = t
        if t + 1 > k:
            k = t + 1
    if k > MAXK:
        raise ValueError("compiled kernel supports at most %d symbols" % MAXK)
    if n == 0:
        return 0, ()
    if k < 2:
        return <int>n, tuple(range(n))
    cdef int x, y
    for x in range(k):
        for y in range(k):
            _g_last[x][y] = -1
            _g_first[x][y] = -1
            _g_runs[x][y] = 0
    _g_n = <int>n
    _g_k = k
    _g_best = 0
    _g_depth = 0
    # the search state is module-global, so keep the GIL to serialize callers
    _dfs(0)
    return _g_best, tuple(_g_best_wit[j] for j in range(_g_best))
