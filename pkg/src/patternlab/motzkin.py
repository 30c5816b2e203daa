"""
Motzkin paths over the letters U, D, L and the step-matching bijection onto
3412-avoiding involutions.

>>> phi(MotzkinPath("ULUDDLUD"))
(5, 2, 4, 3, 1, 6, 8, 7)
>>> str(phi_inverse((2, 1)))
'UD'
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from .errors import DomainError, LimitError
from .permcore import Permutation, contains, format_perm, is_involution, is_permutation

__all__ = [
    "MotzkinPath", "motzkin_numbers", "generate_paths", "heights",
    "tau_k_path", "phi", "phi_inverse", "rc_path", "DEFAULT_PATH_LIMIT",
]

DEFAULT_PATH_LIMIT = 16

_STEP = {"U": 1, "D": -1, "L": 0}


@dataclass(frozen=True)
class MotzkinPath:
    steps: str

    def __post_init__(self):
        h = 0
        for i, s in enumerate(self.steps):
            if s not in _STEP:
                raise DomainError(f"bad step {s!r} at position {i + 1} in {self.steps!r}")
            h += _STEP[s]
            if h < 0:
                raise DomainError(f"path {self.steps!r} goes below zero at step {i + 1}")
        if h != 0:
            raise DomainError(f"path {self.steps!r} ends at height {h}")

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps


def heights(p: MotzkinPath) -> list[int]:
    """Starting height of every step."""
    out, h = [], 0
    for s in p.steps:
        out.append(h)
        h += _STEP[s]
    return out


def motzkin_numbers(n_max: int) -> list[int]:
    m = [1]
    for n in range(1, n_max + 1):
        m.append(m[n - 1] + sum(m[i - 2] * m[n - i] for i in range(2, n + 1)))
    return m


def _path_limit(limit: int | None) -> int:
    if limit is not None:
        return limit
    return int(os.environ.get("PATTERNLAB_LIMIT", DEFAULT_PATH_LIMIT))


@lru_cache(maxsize=None)
def _small_paths(n: int) -> tuple[str, ...]:
    return tuple(_gen(n))


def _gen(n: int) -> Iterator[str]:
    if n == 0:
        yield ""
        return
    sub = _small_paths if n <= 10 else _gen
    for rest in sub(n - 1):
        yield "L" + rest
    for j in range(2, n + 1):
        for inner in sub(j - 2):
            for tail in sub(n - j):
                yield "U" + inner + "D" + tail


def generate_paths(n: int, limit: int | None = None) -> Iterator[MotzkinPath]:
    """Yield every Motzkin path of length n exactly once."""
    if n < 0:
        raise DomainError("path length must be nonnegative")
    cap = _path_limit(limit)
    if n > cap:
        raise LimitError(f"path length {n} exceeds limit {cap}")
    return (MotzkinPath(s) for s in _gen(n))


def tau_k_path(p: MotzkinPath, k: int) -> int:
    if k <= 0:
        return 0
    total = 0
    for s, h in zip(p.steps, heights(p)):
        top = 2 * h - 1 if s == "D" else 2 * h
        if 0 <= k - 1 <= top:
            total += comb(top, k - 1)
    return total


def phi(p: MotzkinPath) -> Permutation:
    """Swap the labels of each up step and the first down step one level above it."""
    steps, hs = p.steps, heights(p)
    labels = list(range(1, len(steps) + 1))
    for i, s in enumerate(steps):
        if s != "U":
            continue
        for j in range(i + 1, len(steps)):
            if steps[j] == "D" and hs[j] == hs[i] + 1:
                labels[i], labels[j] = labels[j], labels[i]
                break
    return tuple(labels)


def phi_inverse(q: Permutation) -> MotzkinPath:
    if not is_permutation(q) or not is_involution(q) or contains(q, (3, 4, 1, 2)):
        raise DomainError(f"{format_perm(q)} is not a 3412-avoiding involution")
    steps = "".join("L" if v == i else ("U" if v > i else "D") for i, v in enumerate(q, 1))
    return MotzkinPath(steps)


def rc_path(p: MotzkinPath) -> MotzkinPath:
    swap = {"U": "D", "D": "U", "L": "L"}
    return MotzkinPath("".join(swap[s] for s in reversed(p.steps)))
