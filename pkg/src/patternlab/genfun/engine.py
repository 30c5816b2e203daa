"""
Truncated-series engine for F_T(x) = sum_n |I_n(3412, T)| x^n.

Every involution avoiding 3412 is empty, starts with 1, or is a star
composition ``sigma1 * sigma2``.  Splitting each forbidden pattern into its
complete blocks tells us which prefix can land in the first part and which
suffix in the second, giving

    F_T = 1 + x F_{beta(T)} + x^2 sum_{i} (sum_Y (-1)^|Y| F_{T_Y}) F_{T_right(i)}

with i ranging over one block index per pattern.  Coefficients are filled in
increasing degree: the x term only reads degree n-1 and the x^2 term only
reads degrees <= n-2, so sets that refer back to themselves are harmless.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from ..errors import DomainError, LimitError
from ..permcore import (
    Permutation, PatternSet, beta, canonicalize, complete_decompose, contains,
    join_blocks, overline,
)
from ..polyalg import PowerSeries

__all__ = ["FTEngine", "ft_series", "default_engine", "engine_key", "DEFAULT_MAX_ORDER"]

DEFAULT_MAX_ORDER = 80

_3412 = (3, 4, 1, 2)


def engine_key(ts: Iterable[Permutation]) -> PatternSet:
    """Canonical set used as the memo key.

    Beyond ``canonicalize`` this drops patterns that contain 3412, since no
    3412-avoiding involution can contain them.
    """
    canon = canonicalize(ts)
    if () in canon:
        return canon
    return PatternSet(p for p in canon if not contains(p, _3412))


@dataclass
class _Plan:
    kind: str                      # "zero", "one", "rec" or "pending"
    beta_key: str = ""
    # (signed combination of sets for the first part, set for the second part)
    terms: tuple[tuple[tuple[tuple[str, int], ...], str], ...] = ()


class FTEngine:
    """Memoized F_T series keyed on canonical pattern sets.

    The memo table is guarded by a lock; concurrent callers serialize.
    """

    def __init__(self, max_order: int = DEFAULT_MAX_ORDER):
        self.max_order = max_order
        self._coeffs: dict[str, list[int]] = {}
        self._plans: dict[str, _Plan] = {}
        self._lock = threading.RLock()

    def __len__(self) -> int:
        return len(self._plans)

    def _register(self, ts: Iterable[Permutation]) -> str:
        pset = engine_key(ts)
        key = pset.key
        if key not in self._plans:
            self._plans[key] = _Plan("pending")  # guards against re-entry
            self._plans[key] = self._make_plan(pset)
            self._coeffs.setdefault(key, [])
        return key

    def _make_plan(self, pset: PatternSet) -> _Plan:
        pats = list(pset)
        if () in pats:
            return _Plan("zero")
        if pats == [(1,)]:
            return _Plan("one")
        beta_key = self._register(beta(p) for p in pats)
        blocks = [complete_decompose(p) for p in pats]
        m = len(pats)
        merged: dict[str, dict[str, int]] = {}
        for idx in product(*(range(1, len(b) + 1) for b in blocks)):
            right = self._register(join_blocks(b[i - 1:]) for b, i in zip(blocks, idx))
            if self._plans[right].kind == "zero":
                continue
            left_now = [overline(join_blocks(b[:i])) for b, i in zip(blocks, idx)]
            left_before = [overline(join_blocks(b[:i - 1])) for b, i in zip(blocks, idx)]
            combo = merged.setdefault(right, {})
            for ys in product((False, True), repeat=m):
                ty = [lb if y else ln for y, lb, ln in zip(ys, left_before, left_now)]
                key = self._register(ty)
                if self._plans[key].kind == "zero":
                    continue
                sign = -1 if sum(ys) % 2 else 1
                combo[key] = combo.get(key, 0) + sign
        terms = []
        for right, combo in merged.items():
            combo = tuple((k, w) for k, w in sorted(combo.items()) if w)
            if combo:
                terms.append((combo, right))
        return _Plan("rec", beta_key, tuple(terms))

    def _coef(self, key: str, n: int) -> int:
        if n < 0:
            return 0
        self._ensure(key, n)
        return self._coeffs[key][n]

    def _ensure(self, key: str, n: int) -> None:
        coeffs = self._coeffs[key]
        plan = self._plans[key]
        while len(coeffs) <= n:
            m = len(coeffs)
            if plan.kind == "zero":
                coeffs.append(0)
                continue
            if plan.kind == "one":
                coeffs.append(1 if m == 0 else 0)
                continue
            c = 1 if m == 0 else 0
            c += self._coef(plan.beta_key, m - 1)
            for combo, right in plan.terms:
                for j in range(m - 1):
                    a = sum(w * self._coef(k, j) for k, w in combo)
                    if a:
                        c += a * self._coef(right, m - 2 - j)
            coeffs.append(c)

    def coefficients(self, ts: Iterable[Permutation], order: int) -> list[int]:
        if order < 0:
            raise DomainError("order must be nonnegative")
        if order > self.max_order:
            raise LimitError(f"order {order} exceeds engine limit {self.max_order}")
        with self._lock:
            key = self._register(ts)
            self._ensure(key, order)
            return self._coeffs[key][: order + 1]

    def series(self, ts: Iterable[Permutation], order: int) -> PowerSeries:
        return PowerSeries(self.coefficients(ts, order), order)


_default = FTEngine()


def default_engine() -> FTEngine:
    return _default


def ft_series(ts: Iterable[Permutation], order: int) -> PowerSeries:
    """Series of F_T through x^order using the shared engine."""
    return _default.series(ts, order)
