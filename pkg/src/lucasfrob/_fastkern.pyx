# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Apery shortest-path and coin-reachability sieve.

Inputs must fit comfortably in int64; the backend module checks bounds
and falls back to the pure-Python kernels otherwise.
"""

from libc.stdlib cimport free, malloc

cdef long long INF = (<long long>1) << 62


def apery(long long n, gens):
    """Least semigroup element per residue class mod n (round-robin)."""
    cdef dict best = {}
    cdef long long g, r
    for g in gens:
        r = g % n
        if r and (r not in best or g < best[r]):
            best[r] = g
    cdef Py_ssize_t m = len(best)
    cdef long long *res = <long long *> malloc(m * sizeof(long long))
    cdef long long *wt = <long long *> malloc(m * sizeof(long long))
    cdef long long *dist = <long long *> malloc(n * sizeof(long long))
    if res == NULL or wt == NULL or dist == NULL:
        free(res); free(wt); free(dist)
        raise MemoryError()
    cdef Py_ssize_t j = 0
    for r in sorted(best):
        res[j] = r
        wt[j] = best[r]
        j += 1
    cdef long long i, t, nd, di
    for i in range(n):
        dist[i] = INF
    dist[0] = 0
    cdef bint changed = True
    # Bellman-Ford style passes; the number of passes is bounded by the
    # longest shortest path in edges, which is small for our semigroups.
    while changed:
        changed = False
        for i in range(n):
            di = dist[i]
            if di >= INF:
                continue
            for j in range(m):
                t = i + res[j]
                if t >= n:
                    t -= n
                nd = di + wt[j]
                if nd < dist[t]:
                    dist[t] = nd
                    changed = True
    out = [dist[i] for i in range(n)]
    free(res); free(wt); free(dist)
    return out


def sieve(gens, long long limit):
    """Byte mask of length limit+1: mask[v] = 1 iff v is a sum of gens."""
    coins_py = sorted(g for g in set(gens) if 0 < g <= limit)
    cdef Py_ssize_t m = len(coins_py)
    cdef long long *coins = <long long *> malloc(m * sizeof(long long))
    if coins == NULL:
        raise MemoryError()
    cdef Py_ssize_t j
    for j in range(m):
        coins[j] = coins_py[j]
    mask = bytearray(limit + 1)
    cdef unsigned char[:] mk = mask
    mk[0] = 1
    cdef long long v, c
    for v in range(1, limit + 1):
        for j in range(m):
            c = coins[j]
            if c > v:
                break
            if mk[v - c]:
                mk[v] = 1
                break
    free(coins)
    return mask
