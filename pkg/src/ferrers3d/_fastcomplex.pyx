# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernels over 64-bit adjacency masks.

Same contracts as ``_purecomplex``; callers must keep n <= 64.
"""

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64


cdef void _extend(u64 chosen, u64 cand, u64 excluded, u64 *comp, list out):
    cdef u64 pool, m, low
    cdef int v, pivot, best, score
    if cand == 0 and excluded == 0:
        out.append(chosen)
        return
    pool = cand | excluded
    pivot = -1
    best = -1
    m = pool
    while m:
        low = m & (~m + 1)
        m ^= low
        v = __builtin_ctzll(low)
        score = __builtin_popcountll(cand & comp[v])
        if score > best:
            pivot = v
            best = score
    m = cand & ~comp[pivot]
    while m:
        low = m & (~m + 1)
        m ^= low
        v = __builtin_ctzll(low)
        _extend(chosen | low, cand & comp[v], excluded & comp[v], comp, out)
        cand &= ~low
        excluded |= low


def maximal_independent_sets(adj):
    """All maximal independent sets, as an ascending list of bitmasks."""
    cdef int n = len(adj)
    cdef int v
    cdef u64 full
    cdef u64 comp[64]
    if n == 0:
        return [0]
    if n > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    full = <u64> (~0) if n == 64 else ((<u64> 1 << n) - 1)
    for v in range(n):
        comp[v] = full & ~(<u64> adj[v]) & ~(<u64> 1 << v)
    out = []
    _extend(0, full, 0, comp, out)
    out.sort()
    return out


cdef void _count(u64 cand, int size, u64 *adj, long long *counts):
    cdef u64 m, low
    cdef int v
    counts[size] += 1
    m = cand
    while m:
        low = m & (~m + 1)
        m ^= low
        v = __builtin_ctzll(low)
        _count(m & ~adj[v], size + 1, adj, counts)


def count_independent_sets_by_size(adj):
    """counts[s] = number of independent sets of size s (counts[0] = 1)."""
    cdef int n = len(adj)
    cdef int v
    cdef u64 masks[64]
    cdef long long counts[65]
    if n > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    for v in range(n + 1):
        counts[v] = 0
    for v in range(n):
        masks[v] = <u64> adj[v]
    _count(<u64> (~0) if n == 64 else ((<u64> 1 << n) - 1), 0, masks, counts)
    return [counts[v] for v in range(n + 1)]
