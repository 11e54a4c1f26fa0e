"""Kernel selection: compiled extension when available, pure Python otherwise.

Set LUCASFROB_PURE=1 to force the pure-Python kernels.  The compiled
kernels work in int64; calls whose values could overflow are routed to
the pure-Python side automatically.
"""

from __future__ import annotations

import os

from . import _purekern

try:
    from . import _fastkern  # type: ignore[attr-defined]
except ImportError:  # not built; pure-Python fallback
    _fastkern = None

if os.environ.get("LUCASFROB_PURE"):
    _fastkern = None

BACKEND = "cython" if _fastkern is not None else "python"

# Apery distances are bounded by n * max(gens); stay well under 2**63.
_INT64_SAFE = (1 << 62) - 1


def apery_kernel(n: int, gens: list[int]) -> list[int]:
    """w(i) for every residue i mod n over the semigroup of gens."""
    if _fastkern is not None and n * max(gens) < _INT64_SAFE:
        return _fastkern.apery(n, gens)
    return _purekern.apery(n, gens)


def sieve_kernel(gens: list[int], limit: int) -> bytearray:
    """Reachability mask for 0..limit under nonnegative sums of gens."""
    if limit < 0:
        return bytearray()
    if _fastkern is not None and limit < _INT64_SAFE:
        return _fastkern.sieve(gens, limit)
    return _purekern.sieve(gens, limit)
