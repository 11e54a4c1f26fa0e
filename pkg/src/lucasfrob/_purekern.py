"""Pure-Python kernels: Apery shortest-path and coin-reachability sieve.

Same contracts as the compiled versions in _fastkern; selected by the
backend module when the extension is unavailable or inputs exceed int64.
"""

from __future__ import annotations

import heapq


def apery(n: int, gens: list[int]) -> list[int]:
    """Least semigroup element per residue class mod n.

    Dijkstra over the residue graph: node i, edge i -> (i+g) mod n of
    weight g.  Requires gcd(gens + [n]) == 1 so every residue is reached.
    """
    steps: dict[int, int] = {}
    for g in gens:
        r = g % n
        if r and (r not in steps or g < steps[r]):
            steps[r] = g
    edges = sorted(steps.items())
    dist: list[int | None] = [None] * n
    dist[0] = 0
    heap: list[tuple[int, int]] = [(0, 0)]
    while heap:
        d, i = heapq.heappop(heap)
        if dist[i] is not None and d > dist[i]:
            continue
        for r, g in edges:
            j = (i + r) % n
            nd = d + g
            if dist[j] is None or nd < dist[j]:
                dist[j] = nd
                heapq.heappush(heap, (nd, j))
    return dist  # type: ignore[return-value]


def sieve(gens: list[int], limit: int) -> bytearray:
    """Byte mask of length limit+1: mask[v] = 1 iff v is a sum of gens."""
    mask = bytearray(limit + 1)
    mask[0] = 1
    coins = sorted(g for g in set(gens) if 0 < g <= limit)
    for v in range(1, limit + 1):
        for c in coins:
            if c > v:
                break
            if mask[v - c]:
                mask[v] = 1
                break
    return mask
