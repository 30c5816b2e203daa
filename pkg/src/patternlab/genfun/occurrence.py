"""
Generating functions for 3412-avoiding involutions containing exactly r
copies of a decreasing pattern.

Through the path bijection, an occurrence count of 2k...21 (even case) or
2k+1...21 (odd case) becomes a weighted count of steps above a threshold
height.  The sum runs over the step-count vectors (d_0..d_b, l_0..l_b)
whose weighted total is r; each vector contributes binomial multiplicities
times powers of Chebyshev ratios for the excursions below the threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..errors import DomainError
from ..polyalg import IntPoly, RatFunc, binom, p_cheb, q_cheb

__all__ = ["OccurrenceSpec", "occurrence_gf", "occurrence_corollary", "solutions"]


@dataclass(frozen=True)
class OccurrenceSpec:
    """Exactly r copies of 2k...21 (parity "even") or 2k+1...21 (parity "odd").

    b bounds the highest step level that can carry weight; it is derived
    from r when omitted.
    """
    k: int
    r: int
    parity: str
    b: int | None = None

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise DomainError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if self.k < 1 or self.r < 1:
            raise DomainError("need k >= 1 and r >= 1")
        if self.b is None:
            object.__setattr__(self, "b", _smallest_b(self.k, self.r, self.parity))
        elif not _b_ok(self.k, self.r, self.parity, self.b):
            raise DomainError(f"b = {self.b} violates the bound for r = {self.r}, k = {self.k}")

    @classmethod
    def for_length(cls, length: int, r: int) -> "OccurrenceSpec":
        """Spec for the decreasing pattern of the given length (>= 2)."""
        if length < 2:
            raise DomainError("decreasing pattern length must be >= 2")
        return cls(length // 2, r, "odd" if length % 2 else "even")

    @property
    def length(self) -> int:
        return 2 * self.k + (self.parity == "odd")

    def weights(self) -> tuple[list[int], list[int]]:
        """Per-level contribution of one d_i step pair and of one l_i step."""
        k, b = self.k, self.b
        if self.parity == "even":
            dw = [binom(2 * k + 2 * i - 2, 2 * k - 1) + binom(2 * k + 2 * i - 1, 2 * k - 1)
                  for i in range(b + 1)]
            lw = [binom(2 * k + 2 * i, 2 * k - 1) for i in range(b + 1)]
        else:
            dw = [binom(2 * k + 2 * i + 1, 2 * k) + binom(2 * k + 2 * i, 2 * k)
                  for i in range(b + 1)]
            lw = [binom(2 * k + 2 * i, 2 * k) for i in range(b + 1)]
        return dw, lw


def _b_ok(k: int, r: int, parity: str, b: int) -> bool:
    if b < 0:
        return False
    if parity == "even":
        return r < min(binom(2 * k + 2 * b + 2, 2 * k - 1),
                       binom(2 * k + 2 * b, 2 * k - 1) + binom(2 * k + 2 * b + 1, 2 * k - 1))
    return binom(2 * k + 2 * b, 2 * k) <= r < binom(2 * k + 2 * b + 2, 2 * k)


def _smallest_b(k: int, r: int, parity: str) -> int:
    # the window moves monotonically upward with b, so a short scan suffices
    for b in range(r + 1):
        if _b_ok(k, r, parity, b):
            return b
    raise DomainError(f"no admissible b for r = {r}, k = {k}, parity {parity}")


def solutions(spec: OccurrenceSpec) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All nonnegative (d, l) with weighted sum r, by backtracking from level b down."""
    dw, lw = spec.weights()
    b = spec.b
    d = [0] * (b + 1)
    l = [0] * (b + 1)

    def level(i: int, left: int):
        if i < 0:
            if left == 0:
                yield tuple(d), tuple(l)
            return
        for di in range(left // dw[i] + 1 if dw[i] else 1):
            rest = left - di * dw[i]
            for li in range(rest // lw[i] + 1 if lw[i] else 1):
                d[i], l[i] = di, li
                yield from level(i - 1, rest - li * lw[i])
        d[i] = l[i] = 0

    yield from level(b, spec.r)


def _term_even(k: int, d: tuple[int, ...], l: tuple[int, ...]) -> RatFunc | None:
    b = len(d) - 1
    mult = 1
    for i in range(b + 1):
        nxt = d[i + 1] if i < b else 0
        mult *= binom(d[i] + nxt + l[i] - 1, nxt + l[i]) * binom(nxt + l[i], l[i])
        if not mult:
            return None
    d0 = d[0]
    xexp = 2 * k - 2 + sum(2 * di + li for di, li in zip(d, l))
    pk1, pk = p_cheb(k - 1), p_cheb(k)
    if d0 >= 1:
        return RatFunc((pk1 ** (d0 - 1)).shift(xexp) * mult, pk ** (d0 + 1))
    # d0 = 0 leaves U_{k-1} in the denominator
    return RatFunc(IntPoly.monomial(xexp, mult), pk * pk1)


def _term_odd(k: int, d: tuple[int, ...], l: tuple[int, ...]) -> RatFunc | None:
    b = len(d) - 1
    mult = 1
    for i in range(b + 1):
        prev = d[i - 1] if i > 0 else 1
        mult *= binom(d[i] + prev + l[i] - 1, d[i] + l[i]) * binom(d[i] + l[i], l[i])
        if not mult:
            return None
    a = d[0] + l[0]
    xexp = 2 * k + sum(2 * di + li for di, li in zip(d, l))
    pk, qk1 = p_cheb(k), q_cheb(k + 1)
    if a >= 1:
        return RatFunc((pk ** (a - 1)).shift(xexp) * mult, qk1 ** (a + 1))
    return RatFunc(IntPoly.monomial(xexp, mult), qk1 * pk)


def occurrence_gf(spec: OccurrenceSpec) -> RatFunc:
    """Length generating function of involutions in I(3412) with exactly
    ``spec.r`` copies of the decreasing pattern of length ``spec.length``."""
    term = _term_even if spec.parity == "even" else _term_odd
    total = RatFunc(0)
    for d, l in solutions(spec):
        t = term(spec.k, d, l)
        if t is not None:
            total = total + t
    return total


def occurrence_corollary(spec: OccurrenceSpec) -> RatFunc:
    """Direct closed forms for r in {1, 2}."""
    k = spec.k
    if spec.parity == "even":
        pk, pk1 = p_cheb(k), p_cheb(k - 1)
        if spec.r == 1:
            return RatFunc(IntPoly.monomial(2 * k), pk ** 2)
        if spec.r == 2:
            return RatFunc(pk1.shift(2 * k + 2), pk ** 3)
    else:
        qk1, pk = q_cheb(k + 1), p_cheb(k)
        if spec.r == 1:
            return RatFunc(IntPoly.monomial(2 * k + 1), qk1 ** 2)
        if spec.r == 2:
            return RatFunc(pk.shift(2 * k + 2), qk1 ** 3)
    raise DomainError("corollary fast path only covers r = 1 and r = 2")
