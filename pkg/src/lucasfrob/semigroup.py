"""Generic numerical-semigroup engine (the independent oracle).

Everything here is computed from the generators alone, with no knowledge
of the Lucas closed forms: Apery tables by shortest-path relaxation over
residues, gaps by an independent coin sieve, minimal generators by
redundancy testing.
"""

from __future__ import annotations

from math import gcd

from . import backend

DEFAULT_TABLE_BOUND = 10_000_000


class NotNumericalSemigroupError(ValueError):
    """The generator set does not define a numerical semigroup (gcd != 1)."""


class TableBoundExceeded(RuntimeError):
    """An Apery table would exceed the configured size bound."""


class AperyTable:
    """For a nonzero element n: w(i) = least semigroup element == i (mod n)."""

    __slots__ = ("n", "w")

    def __init__(self, n: int, w: tuple[int, ...]):
        self.n = n
        self.w = w

    def __getitem__(self, residue: int) -> int:
        return self.w[residue]

    def __len__(self) -> int:
        return self.n

    def max(self) -> int:
        return max(self.w)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AperyTable) and self.n == other.n and self.w == other.w
        )

    def __repr__(self) -> str:
        return f"AperyTable(n={self.n})"


class NumericalSemigroup:
    """A numerical semigroup given by generators with gcd 1.

    Oracle artifacts (Apery table for the multiplicity, gap list, minimal
    generators) are computed on first use and cached; instances are
    otherwise immutable.
    """

    def __init__(self, generators, table_bound: int = DEFAULT_TABLE_BOUND):
        gens = sorted({int(g) for g in generators})
        if not gens:
            raise ValueError("generator set must be nonempty")
        if gens[0] <= 0:
            raise ValueError(f"generators must be positive, got {gens[0]}")
        g = 0
        for x in gens:
            g = gcd(g, x)
        if g != 1:
            raise NotNumericalSemigroupError(
                f"gcd of generators is {g}, not 1: {gens}"
            )
        self.generators: list[int] = gens
        self.table_bound = table_bound
        self._apery_mult: AperyTable | None = None
        self._gaps: list[int] | None = None
        self._msg: list[int] | None = None

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    # -- Apery machinery -------------------------------------------------

    def apery(self, n: int | None = None) -> AperyTable:
        """Apery table of n (default: the multiplicity).  Requires n in S."""
        if n is None or n == self.multiplicity:
            if self._apery_mult is None:
                self._apery_mult = self._compute_apery(self.multiplicity)
            return self._apery_mult
        if n < 1 or not self.contains(n):
            raise ValueError(f"{n} is not a nonzero element of the semigroup")
        return self._compute_apery(n)

    def _check_bound(self, size: int, what: str) -> None:
        if size > self.table_bound:
            raise TableBoundExceeded(
                f"{what} of size {size} exceeds bound {self.table_bound}"
            )

    def _compute_apery(self, n: int) -> AperyTable:
        self._check_bound(n, f"Apery table for n={n}")
        return AperyTable(n, tuple(backend.apery_kernel(n, self.generators)))

    def _sieve(self, coins: list[int], limit: int) -> bytearray:
        self._check_bound(limit + 1, f"reachability sieve up to {limit}")
        return backend.sieve_kernel(coins, limit)

    def contains(self, x: int) -> bool:
        """Membership via the Apery criterion: x in S iff x >= w(x mod n)."""
        if x < 0:
            return False
        t = self.apery()
        return x >= t.w[x % t.n]

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def frobenius(self) -> int:
        """Greatest integer not in S; -1 when S is all of the naturals."""
        t = self.apery()
        return max(t.w) - t.n

    def genus(self) -> int:
        """Number of gaps, via the Apery table (two forms cross-checked)."""
        t = self.apery()
        g = sum((w - i) // t.n for i, w in enumerate(t.w))
        # Selmer's form must agree exactly.
        assert 2 * sum(t.w) - t.n * (t.n - 1) == 2 * t.n * g
        return g

    # -- Sieve-based artifacts (independent of the Apery table) ----------

    def gaps(self) -> list[int]:
        """All positive integers not in S, by explicit coin sieve."""
        if self._gaps is None:
            f = self.frobenius()
            if f < 0:
                self._gaps = []
            else:
                mask = self._sieve(self.generators, f)
                self._gaps = [v for v in range(1, f + 1) if not mask[v]]
        return self._gaps

    def sporadic_count(self) -> int:
        """n(S): number of semigroup elements strictly below the Frobenius number."""
        f = self.frobenius()
        if f < 0:
            return 0
        mask = self._sieve(self.generators, f)
        return sum(mask[v] for v in range(f))

    # -- Minimal generators ----------------------------------------------

    def minimal_generators(self) -> list[int]:
        """The unique minimal system: drop every generator reachable from the rest."""
        if self._msg is None:
            msg = []
            for i, g in enumerate(self.generators):
                others = self.generators[:i] + self.generators[i + 1 :]
                if not others or not self._sieve(others, g)[g]:
                    msg.append(g)
            self._msg = msg
        return list(self._msg)

    def embedding_dimension(self) -> int:
        return len(self.minimal_generators())

    def wilf_check(self) -> bool:
        """Wilf's inequality F(S)+1 <= e(S) * n(S)."""
        return self.frobenius() + 1 <= self.embedding_dimension() * self.sporadic_count()

    def __repr__(self) -> str:
        return f"NumericalSemigroup({self.generators})"


def from_generators(gens, table_bound: int = DEFAULT_TABLE_BOUND) -> NumericalSemigroup:
    return NumericalSemigroup(gens, table_bound=table_bound)
