"""
Continued fractions for tau-statistics on I(3412).

The master fraction in the indeterminates x_1, x_2, ... has level-n
numerator prod_i x_i^(C(2n-2, i-1) + C(2n-1, i-1)) and level-n denominator
1 - prod_i x_i^C(2n, i-1).  A specialization sends each x_i to a monomial
x^a q^b (negative b allowed) or to 0; the fraction is then evaluated
bottom-up as a series in x whose coefficients are polynomials in q.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

from ..errors import DomainError
from ..motzkin import generate_paths, tau_k_path
from ..oracle import enumerate_involutions
from ..permcore import tau_k
from ..polyalg import ONE, ZERO, IntPoly

__all__ = [
    "CFSpec", "cf_series", "default_depth", "specialize", "avoid_decreasing_cf",
    "inversions_cf", "total_decreasing_cf", "lrmax_cf", "fixed_points_cf",
    "lambda_cf", "multivariate_tau_check", "tau_vector",
]

Monomial = Optional[tuple[int, int]]  # (x exponent, q exponent); None is zero


@dataclass(frozen=True)
class CFSpec:
    """Level monomials of a Motzkin-shaped continued fraction.

    ``numerator(n)`` is the level-n numerator (level 0 is 1) and
    ``denominator(n)`` the monomial m with level-n denominator 1 - m.
    """
    numerator: Callable[[int], Monomial]
    denominator: Callable[[int], Monomial]
    name: str = ""


def _monomial(exponents: list[int], xs: Callable[[int], Monomial]) -> Monomial:
    a = b = 0
    for i, e in enumerate(exponents, 1):
        if e == 0:
            continue
        v = xs(i)
        if v is None:
            return None
        a += e * v[0]
        b += e * v[1]
    return a, b


def specialize(xs: Callable[[int], Monomial], name: str = "") -> CFSpec:
    """Build the level monomials of the master fraction under x_i -> xs(i)."""
    def numerator(n: int) -> Monomial:
        if n == 0:
            return 0, 0
        return _monomial([comb(2 * n - 2, i - 1) + comb(2 * n - 1, i - 1)
                          for i in range(1, 2 * n + 1)], xs)

    def denominator(n: int) -> Monomial:
        return _monomial([comb(2 * n, i - 1) for i in range(1, 2 * n + 2)], xs)

    return CFSpec(numerator, denominator, name)


def avoid_decreasing_cf(m: int) -> CFSpec:
    """Finite fraction for involutions avoiding m...21 (m >= 2)."""
    if m < 2:
        raise DomainError("decreasing pattern length must be >= 2")
    return specialize(lambda i: (1, 0) if i == 1 else ((0, 0) if i < m else None),
                      f"avoid {m}...21")


def inversions_cf() -> CFSpec:
    return specialize(lambda i: {1: (1, 0), 2: (0, 1)}.get(i, (0, 0)), "inv")


def total_decreasing_cf() -> CFSpec:
    return specialize(lambda i: (1, 1) if i == 1 else (0, 1), "m")


def lrmax_cf() -> CFSpec:
    return specialize(lambda i: (1, 1) if i == 1 else (0, (-1) ** (i - 1)), "lrmax")


def fixed_points_cf() -> CFSpec:
    return specialize(lambda i: (1, 1) if i == 1 else (0, (-2) ** (i - 1)), "fix")


def lambda_cf(lambdas: dict[int, int]) -> CFSpec:
    """Statistic sum_k lambdas[k] * tau_k, tracked by q."""
    return specialize(lambda i: (int(i == 1), lambdas.get(i, 0)), "lambda")


# -- series in x with q-polynomial coefficients --

QSeries = list[IntPoly]


def _term(mono: Monomial, order: int) -> QSeries:
    out = [ZERO] * (order + 1)
    if mono is None:
        return out
    a, b = mono
    if b < 0:
        raise DomainError(f"specialization produced q^{b}; negative powers are unsupported")
    if a <= order:
        out[a] = IntPoly.monomial(b)
    return out


def _mul(f: QSeries, g: QSeries) -> QSeries:
    n = len(f)
    out = [ZERO] * n
    for i, a in enumerate(f):
        if a:
            for j in range(n - i):
                if g[j]:
                    out[i + j] = out[i + j] + a * g[j]
    return out


def _inverse(f: QSeries) -> QSeries:
    # leading coefficient must be exactly 1
    if f[0] != ONE:
        raise DomainError("continued-fraction level does not start with 1")
    out = [ONE]
    for m in range(1, len(f)):
        acc = ZERO
        for i in range(1, m + 1):
            if f[i]:
                acc = acc + f[i] * out[m - i]
        out.append(-acc)
    return out


def default_depth(order: int) -> int:
    return -(-order // 2) + 2


def cf_series(spec: CFSpec, order: int, depth: int | None = None) -> list[IntPoly]:
    """Coefficients of x^0..x^order, each a polynomial in q."""
    if order < 0:
        raise DomainError("order must be nonnegative")
    need = -(-order // 2) + 1
    if depth is None:
        depth = default_depth(order)
    if depth < need:
        raise DomainError(f"depth {depth} too shallow for order {order}; need >= {need}")
    tail: QSeries = []
    for n in range(depth, -1, -1):
        # every level above n multiplies by a numerator carrying x^2, so
        # level n only matters through x^(order - 2(n-1))
        local = order if n == 0 else order - 2 * (n - 1)
        if local < 0:
            continue
        tail = (tail + [ZERO] * (local + 1))[: local + 1]
        d = _term(spec.denominator(n), local)
        if d[0]:
            raise DomainError(f"level {n} denominator monomial has no x factor")
        den = [ONE - d[0] - tail[0]] + [-v - w for v, w in zip(d[1:], tail[1:])]
        tail = _mul(_term(spec.numerator(n), local), _inverse(den))
    return tail


# -- tau vectors --

def tau_vector(values, n: int, tau) -> tuple[int, ...]:
    return tuple(tau(values, k) for k in range(1, 2 * n + 1))


def multivariate_tau_check(n: int) -> bool:
    """Joint distribution of (tau_1..tau_2n) agrees on I_n(3412) and M_n."""
    if n > 6:
        raise DomainError("multivariate check is capped at n = 6")
    perms = Counter(tau_vector(p, n, tau_k) for p in enumerate_involutions(n))
    paths = Counter(tau_vector(p, n, tau_k_path) for p in generate_paths(n))
    return perms == paths
