"""Zeckendorf-style decompositions over the modified Lucas sequence.

Every positive integer has a unique representation x = sum of distinct
l~_i with no two consecutive indices and never both indices 0 and 2.
beta(x) is the number of summands (which is also the minimum over all
nonnegative-coefficient representations) and gamma(x) the top index.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .sequences import lucas, lucas_tilde


@dataclass(frozen=True)
class ZeckendorfDecomposition:
    """An integer x >= 0 with its unique sparse index set over l~."""

    x: int
    indices: tuple[int, ...]

    @property
    def beta(self) -> int:
        return len(self.indices)

    @property
    def gamma(self) -> int | None:
        """Top index, or None for x = 0 (no l~_k is <= 0)."""
        return self.indices[-1] if self.indices else None


@dataclass(frozen=True)
class SparseSubset:
    """A subset of {0, ..., n-1} with no two consecutive members."""

    n: int
    members: tuple[int, ...]


def gamma(x: int) -> int:
    """Largest k with l~_k <= x.  Binary search over the cached sequence."""
    if x < 1:
        raise ValueError(f"gamma is defined for x >= 1, got {x}")
    hi = 1
    while lucas_tilde(hi) <= x:
        hi *= 2
    lo = 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if lucas_tilde(mid) <= x:
            lo = mid
        else:
            hi = mid
    return lo


def decompose(x: int) -> ZeckendorfDecomposition:
    """Greedy decomposition: repeatedly take the largest l~_k <= remainder.

    The result is validated against all four structural invariants; a
    violation would be an internal error, not bad input.
    """
    if x < 0:
        raise ValueError(f"cannot decompose negative integer {x}")
    indices: list[int] = []
    rest = x
    while rest:
        k = gamma(rest)
        indices.append(k)
        rest -= lucas_tilde(k)
    indices.reverse()
    dec = ZeckendorfDecomposition(x, tuple(indices))
    _validate(dec)
    return dec


def _validate(dec: ZeckendorfDecomposition) -> None:
    idx = dec.indices
    if sum(lucas_tilde(i) for i in idx) != dec.x:
        raise AssertionError(f"decomposition of {dec.x} does not re-sum")
    if any(b - a < 2 for a, b in zip(idx, idx[1:])):
        raise AssertionError(f"consecutive indices in decomposition of {dec.x}")
    if 0 in idx and 2 in idx:
        raise AssertionError(f"indices 0 and 2 both present for {dec.x}")
    if idx:
        top = idx[-1]
        if not lucas_tilde(top) <= dec.x < lucas_tilde(top + 1):
            raise AssertionError(f"top index of {dec.x} is not gamma")


def beta(x: int) -> int:
    """Summand count of the unique decomposition (minimal over all reps)."""
    return decompose(x).beta


def beta_bruteforce(x: int, max_index: int) -> int:
    """Minimum number of l~-terms summing to x, repeats allowed.

    Deliberately naive unbounded-knapsack DP sharing no code with
    decompose(); serves as the independent minimality oracle.
    """
    if x < 0:
        raise ValueError(f"cannot represent negative integer {x}")
    if x == 0:
        return 0
    coins = [lucas_tilde(i) for i in range(max_index + 1)]
    coins = sorted({c for c in coins if c <= x})
    big = x + 1
    dp = [0] + [big] * x
    for v in range(1, x + 1):
        best = big
        for c in coins:
            if c > v:
                break
            if dp[v - c] + 1 < best:
                best = dp[v - c] + 1
        dp[v] = best
    return dp[x]


def count_sparse_subsets(n: int, m: int) -> int:
    """Number of m-subsets of {0,...,n-1} with no two consecutive members.

    Kaplansky's count C(n+1-m, m); zero when m > (n+1)/2.  The empty set
    is counted for every n, including n = 0.
    """
    if n < 0 or m < 0:
        raise ValueError(f"arguments must be nonnegative, got ({n}, {m})")
    if m == 0:
        return 1
    if 2 * m > n + 1:
        return 0
    return comb(n + 1 - m, m)


def enumerate_sparse_subsets(n: int, m: int) -> list[SparseSubset]:
    """All m-element sparse subsets of {0,...,n-1}, lexicographic order."""
    if n < 0 or m < 0:
        raise ValueError(f"arguments must be nonnegative, got ({n}, {m})")
    out: list[SparseSubset] = []
    chosen: list[int] = []

    def rec(start: int) -> None:
        if len(chosen) == m:
            out.append(SparseSubset(n, tuple(chosen)))
            return
        need = m - len(chosen)
        # i, i+2, ..., i+2(need-1) must all fit below n
        for i in range(start, n - 2 * (need - 1)):
            chosen.append(i)
            rec(i + 2)
            chosen.pop()

    rec(0)
    return out


def enumerate_L(a: int) -> list[SparseSubset]:
    """Index sets of the decompositions of 1 .. l_a - 1, in that order.

    Each is a sparse subset of {0,...,a-1} avoiding {0,2} together; there
    are exactly l_a - 1 of them and the map x -> indices is injective.
    """
    if a < 4:
        raise ValueError(f"enumerate_L requires a >= 4, got {a}")
    return [SparseSubset(a, decompose(x).indices) for x in range(1, lucas(a))]
