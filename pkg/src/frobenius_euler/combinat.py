"""Exact integer combinatorics: a growable Pascal table and factorials."""

from __future__ import annotations

import math
import threading

_lock = threading.Lock()
_pascal: list[list[int]] = [[1]]


def binomial(n: int, k: int) -> int:
    """C(n, k) from a cached Pascal triangle; zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    if n >= len(_pascal):
        with _lock:
            while len(_pascal) <= n:
                prev = _pascal[-1]
                row = [1] + [prev[i - 1] + prev[i] for i in range(1, len(prev))] + [1]
                _pascal.append(row)
    return _pascal[n][k]


def factorial(n: int) -> int:
    return math.factorial(n)


def falling(n: int, k: int) -> int:
    """Falling factorial n (n-1) ... (n-k+1); zero when k > n >= 0."""
    if k > n:
        return 0
    return math.perm(n, k)
