"""Exact Lucas, modified-Lucas, and Fibonacci numbers.

The Lucas series is l_0 = 2, l_1 = 1, l_{n+2} = l_{n+1} + l_n, extended
backwards by the single value l_{-1} = -1.  The modified series swaps the
first two terms so it is strictly increasing:

    l~_0 = 1, l~_1 = 2, l~_n = l_n  (n >= 2)
"""

from __future__ import annotations

import threading


class SequenceCache:
    """Append-only memo of Lucas and Fibonacci values.

    Values are plain Python ints, so arbitrarily large indices are exact.
    Growth is serialized with a lock; reads of already-cached entries are
    lock-free.
    """

    def __init__(self) -> None:
        # slot k holds l_{k-1}; l_{-1} is stored, never derived.
        self._lucas: list[int] = [-1, 2, 1]
        self._fib: list[int] = [0, 1]
        self._lock = threading.Lock()

    def lucas(self, n: int) -> int:
        """Lucas number l_n for n >= -1."""
        if n < -1:
            raise ValueError(f"Lucas index must be >= -1, got {n}")
        if n + 2 > len(self._lucas):
            with self._lock:
                while n + 2 > len(self._lucas):
                    self._lucas.append(self._lucas[-1] + self._lucas[-2])
        return self._lucas[n + 1]

    def lucas_tilde(self, n: int) -> int:
        """Modified Lucas number l~_n for n >= 0 (monotone reordering)."""
        if n < 0:
            raise ValueError(f"modified-Lucas index must be >= 0, got {n}")
        if n == 0:
            return 1
        if n == 1:
            return 2
        return self.lucas(n)

    def fibonacci(self, n: int) -> int:
        """Fibonacci number f_n for n >= 0 (f_0 = 0, f_1 = 1)."""
        if n < 0:
            raise ValueError(f"Fibonacci index must be >= 0, got {n}")
        if n + 1 > len(self._fib):
            with self._lock:
                while n + 1 > len(self._fib):
                    self._fib.append(self._fib[-1] + self._fib[-2])
        return self._fib[n]


_shared = SequenceCache()


def lucas(n: int) -> int:
    return _shared.lucas(n)


def lucas_tilde(n: int) -> int:
    return _shared.lucas_tilde(n)


def fibonacci(n: int) -> int:
    return _shared.fibonacci(n)
