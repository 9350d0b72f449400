# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled branch-and-bound kernels over uint64 vertex bitmasks.

Mirrors tricover._kernels_py exactly (same branching order, same incumbent
handling) so both backends return identical certificates. Callers must
keep n <= 63 and m <= 512; tricover._native enforces that and falls back
to the pure kernels otherwise.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64


cdef int _packing_bound(u64* rem, int cnt) noexcept nogil:
    cdef u64 used = 0
    cdef int i, c = 0
    for i in range(cnt):
        if not (rem[i] & used):
            c += 1
            used |= rem[i]
    return c


cdef void _cover_rec(u64* rem, int rem_cnt, int depth, int n,
                     int* chosen, int* best, int* best_len,
                     u64* scratch, int stride) noexcept nogil:
    cdef int i, v, cnt
    cdef u64 vbit, first
    cdef u64* nxt
    if rem_cnt == 0:
        if depth < best_len[0]:
            best_len[0] = depth
            for i in range(depth):
                best[i] = chosen[i]
        return
    if depth + _packing_bound(rem, rem_cnt) >= best_len[0]:
        return
    first = rem[0]
    nxt = scratch + depth * stride
    for v in range(n):
        vbit = (<u64>1) << v
        if not (first & vbit):
            continue
        chosen[depth] = v
        cnt = 0
        for i in range(rem_cnt):
            if not (rem[i] & vbit):
                nxt[cnt] = rem[i]
                cnt += 1
        _cover_rec(nxt, cnt, depth + 1, n, chosen, best, best_len,
                   scratch, stride)


cdef void _match_rec(u64* masks, int m, int i, u64 used, int depth,
                     int* chosen, int* best, int* best_len) noexcept nogil:
    cdef int j, avail = 0, first = -1
    if depth > best_len[0]:
        best_len[0] = depth
        for j in range(depth):
            best[j] = chosen[j]
    for j in range(i, m):
        if not (masks[j] & used):
            avail += 1
            if first < 0:
                first = j
    if depth + avail <= best_len[0]:
        return
    chosen[depth] = first
    _match_rec(masks, m, first + 1, used | masks[first], depth + 1,
               chosen, best, best_len)
    _match_rec(masks, m, first + 1, used, depth,
               chosen, best, best_len)


def min_cover(edge_masks, int n, incumbent):
    """Compiled counterpart of _kernels_py.min_cover."""
    cdef int m = len(edge_masks)
    cdef int best_len = len(incumbent)
    cdef int i
    if n > 63 or m > 512:
        raise ValueError("instance too large for the compiled kernel")
    if m == 0:
        return []
    cdef u64* rem = <u64*> malloc(m * sizeof(u64))
    cdef u64* scratch = <u64*> malloc((m + 1) * m * sizeof(u64))
    cdef int* chosen = <int*> malloc((m + 1) * sizeof(int))
    cdef int* best = <int*> malloc((best_len + 1) * sizeof(int))
    if rem == NULL or scratch == NULL or chosen == NULL or best == NULL:
        free(rem); free(scratch); free(chosen); free(best)
        raise MemoryError()
    try:
        for i in range(m):
            rem[i] = edge_masks[i]
        for i in range(best_len):
            best[i] = incumbent[i]
        _cover_rec(rem, m, 0, n, chosen, best, &best_len, scratch, m)
        return [best[i] for i in range(best_len)]
    finally:
        free(rem); free(scratch); free(chosen); free(best)


def max_matching(edge_masks, int n, incumbent):
    """Compiled counterpart of _kernels_py.max_matching."""
    cdef int m = len(edge_masks)
    cdef int best_len = len(incumbent)
    cdef int i
    if n > 63 or m > 512:
        raise ValueError("instance too large for the compiled kernel")
    if m == 0:
        return []
    cdef u64* masks = <u64*> malloc(m * sizeof(u64))
    cdef int* chosen = <int*> malloc((m + 1) * sizeof(int))
    cdef int* best = <int*> malloc((m + 1) * sizeof(int))
    if masks == NULL or chosen == NULL or best == NULL:
        free(masks); free(chosen); free(best)
        raise MemoryError()
    try:
        for i in range(m):
            masks[i] = edge_masks[i]
        for i in range(best_len):
            best[i] = incumbent[i]
        _match_rec(masks, m, 0, 0, 0, chosen, best, &best_len)
        return [best[i] for i in range(best_len)]
    finally:
        free(masks); free(chosen); free(best)
