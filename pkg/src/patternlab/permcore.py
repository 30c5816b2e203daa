"""
Permutations in one-line notation, classical pattern containment, and the
structural maps used by the generating-function engine.

A permutation is a plain tuple of the integers 1..n, e.g. ``(3, 4, 1, 2)``.
The empty tuple is the empty permutation and is a legitimate value everywhere.

>>> star((1,), ())
(3, 2, 1)
>>> complete_decompose((5, 2, 4, 3, 1, 6, 8, 7))
[(5, 2, 4, 3, 1), (1,), (2, 1)]
>>> overline((4, 2, 3, 1))
(1, 2)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _all_orders
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import DomainError

Permutation = tuple[int, ...]

EMPTY: Permutation = ()

__all__ = [
    "Permutation", "PatternSet", "ClassicStats", "EMPTY",
    "parse_perm", "format_perm", "parse_pattern_set", "is_permutation",
    "is_involution", "shift", "normalize", "identity", "decreasing",
    "contains", "avoids", "occurrence_count", "tau_k", "classic_stats",
    "star", "lift", "complete_decompose", "join_blocks", "is_complete",
    "overline", "beta", "kT1", "kT1_iter", "layered", "reverse_complement",
    "inverse_perm", "canonicalize", "all_perms",
]


# -- construction and text form --

def is_permutation(values: Sequence[int]) -> bool:
    return sorted(values) == list(range(1, len(values) + 1))


def is_involution(p: Permutation) -> bool:
    return all(p[v - 1] == i for i, v in enumerate(p, 1))


def parse_perm(text: str) -> Permutation:
    """Parse ``"3 4 1 2"`` or the compact ``"3412"`` (n <= 9).

    ``""`` and ``"()"`` both denote the empty permutation.
    """
    text = text.strip()
    if text in ("", "()"):
        return EMPTY
    if any(ch.isspace() for ch in text):
        tokens = text.split()
    else:
        tokens = list(text)
    values = []
    for tok in tokens:
        if not tok.isdigit() or tok.startswith("0"):
            raise DomainError(f"bad permutation token {tok!r} in {text!r}")
        values.append(int(tok))
    if not is_permutation(values):
        raise DomainError(f"{text!r} is not a permutation of 1..{len(values)}")
    return tuple(values)


def format_perm(p: Permutation) -> str:
    if not p:
        return "()"
    if len(p) <= 9:
        return "".join(map(str, p))
    return " ".join(map(str, p))


def shift(p: Sequence[int], n: int) -> Permutation:
    return tuple(v + n for v in p)


def normalize(values: Sequence[int]) -> Permutation:
    """Rank-normalize a sequence of distinct integers to a permutation."""
    order = sorted(values)
    rank = {v: i for i, v in enumerate(order, 1)}
    return tuple(rank[v] for v in values)


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def all_perms(n: int) -> Iterator[Permutation]:
    return _all_orders(range(1, n + 1))


# -- pattern containment --

def _bounds(pattern: Permutation) -> list[tuple[int, int]]:
    # For pattern position j: index of the earlier position holding the
    # largest smaller value, and of the one holding the smallest larger value
    # (-1 if none). Checking only these two keeps the embedding order-isomorphic.
    out = []
    for j, v in enumerate(pattern):
        lo = hi = -1
        for i in range(j):
            w = pattern[i]
            if w < v and (lo < 0 or w > pattern[lo]):
                lo = i
            elif w > v and (hi < 0 or w < pattern[hi]):
                hi = i
        out.append((lo, hi))
    return out


def _embeddings(host: Permutation, pattern: Permutation, first_only: bool) -> int:
    k, n = len(pattern), len(host)
    if k == 0:
        return 1
    if k > n:
        return 0
    bounds = _bounds(pattern)
    chosen = [0] * k
    count = 0

    def place(j: int, start: int) -> bool:
        nonlocal count
        lo, hi = bounds[j]
        low = chosen[lo] if lo >= 0 else 0
        high = chosen[hi] if hi >= 0 else n + 1
        last = n - (k - j)
        for i in range(start, last + 1):
            v = host[i]
            if low < v < high:
                if j + 1 == k:
                    count += 1
                    if first_only:
                        return True
                else:
                    chosen[j] = v
                    if place(j + 1, i + 1) and first_only:
                        return True
        return False

    place(0, 0)
    return count


def occurrence_count(host: Permutation, pattern: Permutation) -> int:
    """Number of subsequences of `host` order-isomorphic to `pattern`."""
    return _embeddings(host, pattern, first_only=False)


def contains(host: Permutation, pattern: Permutation) -> bool:
    return _embeddings(host, pattern, first_only=True) > 0


def avoids(host: Permutation, patterns: Iterable[Permutation]) -> bool:
    return not any(contains(host, s) for s in patterns)


# -- statistics --

def tau_k(p: Permutation, k: int) -> int:
    """Number of decreasing subsequences of length k (0 for k <= 0)."""
    if k <= 0:
        return 0
    n = len(p)
    # ends[i][m]: decreasing subsequences of length m+1 ending at position i
    ends = [[0] * k for _ in range(n)]
    for i in range(n):
        ends[i][0] = 1
        for j in range(i):
            if p[j] > p[i]:
                row_j, row_i = ends[j], ends[i]
                for m in range(1, k):
                    row_i[m] += row_j[m - 1]
    return sum(row[k - 1] for row in ends)


class ClassicStats(NamedTuple):
    inv: int
    lrmax: int
    rlmin: int
    fix: int


def classic_stats(p: Permutation) -> ClassicStats:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    lrmax, best = 0, 0
    for v in p:
        if v > best:
            lrmax, best = lrmax + 1, v
    rlmin, best = 0, len(p) + 1
    for v in reversed(p):
        if v < best:
            rlmin, best = rlmin + 1, v
    fix = sum(1 for i, v in enumerate(p, 1) if v == i)
    return ClassicStats(inv, lrmax, rlmin, fix)


# -- structural maps --

def star(p1: Permutation, p2: Permutation) -> Permutation:
    """``|p1|+2, p1 shifted by 1, 1, p2 shifted by |p1|+2``."""
    n1 = len(p1)
    return (n1 + 2,) + shift(p1, 1) + (1,) + shift(p2, n1 + 2)


def lift(p: Permutation) -> Permutation:
    """``1`` followed by p shifted up by one."""
    return (1,) + shift(p, 1)


def complete_decompose(p: Permutation) -> list[Permutation]:
    blocks = []
    start, top = 0, 0
    for i, v in enumerate(p, 1):
        top = max(top, v)
        if top == i:
            blocks.append(tuple(w - start for w in p[start:i]))
            start = i
    return blocks


def join_blocks(blocks: Iterable[Permutation]) -> Permutation:
    out: list[int] = []
    for b in blocks:
        base = len(out)
        out.extend(v + base for v in b)
    return tuple(out)


def is_complete(p: Permutation) -> bool:
    return len(p) >= 1 and len(complete_decompose(p)) == 1


def overline(p: Permutation) -> Permutation:
    n = len(p)
    if n <= 1:
        return EMPTY
    first_max, last_one = p[0] == n, p[-1] == 1
    if first_max and last_one:
        return shift(p[1:-1], -1)
    if first_max:
        return p[1:]
    if last_one:
        return shift(p[:-1], -1)
    return p


def beta(p: Permutation) -> Permutation:
    blocks = complete_decompose(p)
    if blocks and blocks[0] == (1,):
        return join_blocks(blocks[1:])
    return p


def reverse_complement(p: Permutation) -> Permutation:
    n = len(p)
    return tuple(n + 1 - v for v in reversed(p))


def inverse_perm(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def layered(*lengths: int) -> Permutation:
    if not lengths or any(l < 1 for l in lengths):
        raise DomainError(f"layer lengths must be positive, got {lengths}")
    out: list[int] = []
    for l in lengths:
        base = len(out)
        out.extend(range(base + l, base, -1))
    return tuple(out)


# -- pattern sets --

def _sort_key(p: Permutation) -> tuple[int, Permutation]:
    return (len(p), p)


@dataclass(frozen=True)
class PatternSet:
    """A finite set of patterns stored in a fixed order."""
    patterns: tuple[Permutation, ...]

    def __init__(self, patterns: Iterable[Sequence[int]] = ()):
        uniq = {tuple(p) for p in patterns}
        for p in uniq:
            if not is_permutation(p):
                raise DomainError(f"{p} is not a permutation")
        object.__setattr__(self, "patterns", tuple(sorted(uniq, key=_sort_key)))

    @property
    def key(self) -> str:
        return ",".join(format_perm(p) if len(p) <= 9 else "[" + format_perm(p) + "]"
                        for p in self.patterns) or "{}"

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    def __contains__(self, p: object) -> bool:
        return p in self.patterns

    def __str__(self) -> str:
        return "{" + ", ".join(format_perm(p) for p in self.patterns) + "}"


def parse_pattern_set(text: str) -> PatternSet:
    """Comma-separated patterns; the empty string is the empty set."""
    if not text.strip():
        return PatternSet()
    return PatternSet(parse_perm(tok) for tok in text.split(","))


def canonicalize(ts: Iterable[Permutation]) -> PatternSet:
    """Drop duplicates and every pattern containing another member."""
    members = sorted(set(map(tuple, ts)), key=_sort_key)
    kept: list[Permutation] = []
    for p in members:
        if not any(contains(p, q) for q in kept):
            kept.append(p)
    return PatternSet(kept)


def kT1(ts: Iterable[Permutation]) -> PatternSet:
    """Wrap every pattern as ``|p|+2, p shifted by 1, 1``."""
    return PatternSet((len(p) + 2,) + shift(p, 1) + (1,) for p in ts)


def kT1_iter(ts: Iterable[Permutation], i: int) -> PatternSet:
    if i < 1:
        raise DomainError("kT1_iter needs i >= 1")
    out = PatternSet(ts)
    for _ in range(i):
        out = kT1(out)
    return out
