"""
Brute-force ground truth.

Involutions avoiding 3412 are built from the two-way recursive structure
(``1`` followed by a shifted smaller involution, or a star composition), so
I_14(3412) with its 113,634 elements is enumerated without touching the
other elements of S_14.  Everything here is deliberately independent of the
generating-function code.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .errors import DomainError, LimitError
from .permcore import (
    Permutation, PatternSet, avoids, classic_stats, lift, occurrence_count,
    star, tau_k,
)
from .polyalg import IntPoly

__all__ = [
    "DEFAULT_LIMIT", "enumerate_involutions", "count_avoiders",
    "count_with_occurrences", "statistic_distribution", "brute_bounded_paths",
    "STATISTICS",
]

DEFAULT_LIMIT = 14
_CACHE_MAX = 10


def _limit(limit: int | None) -> int:
    if limit is not None:
        return limit
    return int(os.environ.get("PATTERNLAB_LIMIT", DEFAULT_LIMIT))


@lru_cache(maxsize=None)
def _cached(n: int) -> tuple[Permutation, ...]:
    return tuple(_build(n))


def _build(n: int) -> Iterator[Permutation]:
    if n == 0:
        yield ()
        return
    sub = _cached if n - 1 <= _CACHE_MAX else _build
    for p in sub(n - 1):
        yield lift(p)
    for j in range(2, n + 1):
        left = sub(j - 2) if j - 2 <= _CACHE_MAX else tuple(_build(j - 2))
        for p1 in left:
            for p2 in sub(n - j):
                yield star(p1, p2)


def enumerate_involutions(n: int, limit: int | None = None) -> Iterator[Permutation]:
    """Yield every element of I_n(3412) exactly once."""
    if n < 0:
        raise DomainError("length must be nonnegative")
    cap = _limit(limit)
    if n > cap:
        raise LimitError(f"length {n} exceeds enumeration limit {cap}")
    if n <= _CACHE_MAX:
        return iter(_cached(n))
    return _build(n)


def count_avoiders(ts: Iterable[Permutation], n: int, limit: int | None = None) -> int:
    """|I_n(3412, T)|."""
    patterns = list(PatternSet(ts))
    if () in patterns:
        return 0
    return sum(1 for p in enumerate_involutions(n, limit) if avoids(p, patterns))


def count_with_occurrences(pattern: Permutation, r: int, n: int,
                           limit: int | None = None) -> int:
    """Number of involutions in I_n(3412) with exactly r occurrences of pattern."""
    return sum(1 for p in enumerate_involutions(n, limit) if occurrence_count(p, pattern) == r)


def _m_stat(p: Permutation) -> int:
    return sum(tau_k(p, k) for k in range(1, len(p) + 1))


STATISTICS: dict[str, Callable[[Permutation], int]] = {
    "inv": lambda p: classic_stats(p).inv,
    "lrmax": lambda p: classic_stats(p).lrmax,
    "rlmin": lambda p: classic_stats(p).rlmin,
    "fix": lambda p: classic_stats(p).fix,
    "m": _m_stat,
}


def statistic_distribution(stat: str, n: int, limit: int | None = None) -> IntPoly:
    """Sum of q^stat(p) over I_n(3412), as a polynomial in q."""
    try:
        f = STATISTICS[stat]
    except KeyError:
        raise DomainError(f"unknown statistic {stat!r}; choose from {sorted(STATISTICS)}") from None
    counts: dict[int, int] = {}
    for p in enumerate_involutions(n, limit):
        v = f(p)
        counts[v] = counts.get(v, 0) + 1
    top = max(counts)
    return IntPoly(counts.get(i, 0) for i in range(top + 1))


def brute_bounded_paths(family: str, r: int, s: int, k: int, length: int) -> int:
    """Count paths of the given length from height r to s staying in [0, k].

    Family N forbids level steps at height k, family O at height 0.
    """
    if family not in ("M", "N", "O"):
        raise DomainError(f"unknown path family {family!r}")
    if length > 14:
        raise LimitError("brute-force path counting is capped at length 14")
    if not (0 <= r <= k and 0 <= s <= k):
        return 0
    ways = [0] * (k + 1)
    ways[r] = 1
    for _ in range(length):
        nxt = [0] * (k + 1)
        for h, w in enumerate(ways):
            if not w:
                continue
            if h + 1 <= k:
                nxt[h + 1] += w
            if h - 1 >= 0:
                nxt[h - 1] += w
            banned = (family == "N" and h == k) or (family == "O" and h == 0)
            if not banned:
                nxt[h] += w
        ways = nxt
    return ways[s]
