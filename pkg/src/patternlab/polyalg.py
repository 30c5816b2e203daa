"""
Exact polynomial, rational-function and truncated power-series arithmetic.

Chebyshev polynomials of the second kind only ever appear here through the
integer family ``p_k = x^k U_k((1-x)/(2x))``, which satisfies
``p_k = (1-x) p_{k-1} - x^2 p_{k-2}`` with ``p_{-1} = 0`` and ``p_0 = 1``.

>>> str(p_cheb(2))
'1 - 2*x'
>>> RatFunc(p_cheb(1), p_cheb(2)).series(4).coefficients
(1, 1, 2, 4, 8)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import comb, gcd
from typing import Iterable, Sequence

from .errors import DomainError, ExpansionError

__all__ = [
    "IntPoly", "RatFunc", "PowerSeries", "TriMatrix", "X", "ONE", "ZERO",
    "p_cheb", "q_cheb", "tri_matrix", "det", "det_and_minor",
    "bounded_path_gf", "series_of", "cheby_sum_identity_check", "poly_gcd",
    "binom",
]


def binom(a: int, b: int) -> int:
    """Binomial coefficient with C(a, 0) = 1 and C(a, b) = 0 for b < 0 or b > a >= 0."""
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < b:
        return 0
    return comb(a, b)


class IntPoly:
    """Dense univariate polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def low(self) -> int:
        """Lowest-order nonzero coefficient."""
        for v in self.coeffs:
            if v:
                return v
        return 0

    def valuation(self) -> int:
        for i, v in enumerate(self.coeffs):
            if v:
                return i
        raise DomainError("zero polynomial has no valuation")

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-v for v in self.coeffs)

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "IntPoly | int") -> "IntPoly":
        return _as_poly(other) - self

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(v * other for v in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise DomainError("negative power of a polynomial")
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        return IntPoly([0] * k + list(self.coeffs)) if self.coeffs else ZERO

    def __call__(self, x):
        acc = 0
        for v in reversed(self.coeffs):
            acc = acc * x + v
        return acc

    def divmod_exact_lc(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Long division over Z; raises if a quotient coefficient is not integral."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [0] * max(len(rem) - dq, 0)
        lead = other.lc()
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if c % lead:
                raise DomainError("inexact integer polynomial division")
            q = c // lead
            quot[i - dq] = q
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= q * b
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            if any(v % other for v in self.coeffs):
                raise DomainError("inexact division by integer")
            return IntPoly(v // other for v in self.coeffs)
        q, r = self.divmod_exact_lc(other)
        if r:
            raise DomainError("polynomial division leaves a remainder")
        return q

    def primitive(self) -> "IntPoly":
        c = self.content()
        if c == 0:
            return ZERO
        if self.lc() < 0:
            c = -c
        return IntPoly(v // c for v in self.coeffs)

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, v in enumerate(self.coeffs):
            if v == 0:
                continue
            mag = abs(v)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if v > 0 else "-" + body)
            else:
                parts.append(("+ " if v > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def to_json(self) -> list[str]:
        return [str(v) for v in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> "IntPoly":
        return cls(int(v) for v in data)


def _as_poly(v: "IntPoly | int") -> IntPoly:
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly([v])
    raise TypeError(f"cannot treat {type(v).__name__} as IntPoly")


ZERO = IntPoly()
ONE = IntPoly([1])
X = IntPoly([0, 1])


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of a by b."""
    d = a.degree - b.degree + 1
    scaled = a * (b.lc() ** max(d, 0))
    return scaled.divmod_exact_lc(b)[1]


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z[x] with positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    if not a:
        return b
    if not b:
        return a
    if a.degree < b.degree:
        a, b = b, a
    while b:
        a, b = b, _prem(a, b).primitive()
    return a.primitive()


class PowerSeries:
    """Truncated power series sum c_n x^n, n = 0..order, with rational coefficients."""

    __slots__ = ("order", "coefficients")

    def __init__(self, coefficients: Iterable[int | Fraction], order: int | None = None):
        c = [_num(v) for v in coefficients]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise DomainError("series order must be nonnegative")
        c = (c + [0] * (order + 1))[: order + 1]
        self.order = order
        self.coefficients: tuple[int | Fraction, ...] = tuple(c)

    def __getitem__(self, n: int):
        if n > self.order:
            raise DomainError(f"coefficient {n} is beyond order {self.order}")
        return self.coefficients[n]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coefficients)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PowerSeries):
            return self.order == other.order and self.coefficients == other.coefficients
        return NotImplemented

    def _pair(self, other: "PowerSeries | int") -> tuple[int, "PowerSeries"]:
        if isinstance(other, (int, Fraction)):
            other = PowerSeries([other], self.order)
        return min(self.order, other.order), other

    def __add__(self, other):
        n, other = self._pair(other)
        return PowerSeries([self[i] + other[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-v for v in self.coefficients], self.order)

    def __sub__(self, other):
        n, other = self._pair(other)
        return PowerSeries([self[i] - other[i] for i in range(n + 1)], n)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([v * other for v in self.coefficients], self.order)
        n, other = self._pair(other)
        a, b = self.coefficients, other.coefficients
        return PowerSeries([sum(a[i] * b[m - i] for i in range(m + 1)) for m in range(n + 1)], n)

    __rmul__ = __mul__

    def inverse(self) -> "PowerSeries":
        a = self.coefficients
        if a[0] == 0:
            raise ExpansionError("series with zero constant term has no inverse")
        inv0 = Fraction(1, 1) / a[0]
        out = [_num(inv0)]
        for m in range(1, self.order + 1):
            s = sum(a[i] * out[m - i] for i in range(1, m + 1))
            out.append(_num(-s * inv0))
        return PowerSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([_num(Fraction(v) / other) for v in self.coefficients], self.order)
        n, other = self._pair(other)
        return self.truncate(n) * other.truncate(n).inverse()

    def truncate(self, n: int) -> "PowerSeries":
        if n > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to {n}")
        return PowerSeries(self.coefficients[: n + 1], n)

    def to_json(self) -> list[str]:
        return [str(v) for v in self.coefficients]

    def __repr__(self) -> str:
        return f"PowerSeries({list(self.coefficients)}, order={self.order})"


def _num(v: int | Fraction) -> int | Fraction:
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


class RatFunc:
    """Reduced quotient of two integer polynomials.

    Normal form: gcd(num, den) is constant, the common integer content is
    removed, and the lowest-order nonzero coefficient of den is positive.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly | int, den: IntPoly | int = 1):
        num, den = _as_poly(num), _as_poly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        c = gcd(num.content(), den.content())
        if den.low() < 0:
            c = -c
        self.num, self.den = num.exact_div(c), den.exact_div(c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, IntPoly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _as_rat(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_rat(other))

    def __rsub__(self, other):
        return _as_rat(other) - self

    def __mul__(self, other):
        other = _as_rat(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rat(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rat(other) / self

    def __pow__(self, e: int):
        if e >= 0:
            return RatFunc(self.num ** e, self.den ** e)
        return RatFunc(self.den ** -e, self.num ** -e)

    def series(self, order: int) -> PowerSeries:
        return series_of(self, order)

    def __str__(self) -> str:
        if self.den == ONE:
            return self.num.format()
        return f"({self.num.format()})/({self.den.format()})"

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def to_json(self) -> dict[str, list[str]]:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RatFunc":
        return cls(IntPoly.from_json(data["num"]), IntPoly.from_json(data["den"]))


def _as_rat(v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    return RatFunc(_as_poly(v))


def series_of(f: RatFunc, order: int) -> PowerSeries:
    """Exact expansion of f at x = 0 through x^order."""
    num, den = f.num, f.den
    d0 = den[0]
    if d0 == 0:
        raise ExpansionError(f"denominator {den} vanishes at 0")
    out: list[int | Fraction] = []
    for m in range(order + 1):
        s = num[m] - sum(den[i] * out[m - i] for i in range(1, min(m, den.degree) + 1))
        out.append(s // d0 if s % d0 == 0 else Fraction(s, d0))
    return PowerSeries(out, order)


# -- Chebyshev family --

@lru_cache(maxsize=None)
def p_cheb(k: int) -> IntPoly:
    """x^k U_k((1-x)/(2x)) as an integer polynomial (k >= -1)."""
    if k < -1:
        raise DomainError("p_cheb needs k >= -1")
    if k == -1:
        return ZERO
    if k == 0:
        return ONE
    return IntPoly([1, -1]) * p_cheb(k - 1) - p_cheb(k - 2).shift(2)


def q_cheb(k: int) -> IntPoly:
    """x^k (U_k + U_{k-1}) at (1-x)/(2x), i.e. p_k + x p_{k-1} (k >= 0)."""
    if k < 0:
        raise DomainError("q_cheb needs k >= 0")
    return p_cheb(k) + p_cheb(k - 1).shift(1)


def cheby_sum_identity_check(k: int, l: int, w: int) -> bool:
    """Check U_{k+w}U_{l+w} - U_k U_l = U_{w-1}U_{k+l+w+1} in p-form.

    Multiplying through by x^(k+l+2w) turns every U_j into p_j times a power
    of x; the identity becomes p_{k+w}p_{l+w} - x^(2w) p_k p_l = p_{w-1}p_{k+l+w+1}.
    """
    if k < -1 or l < -1 or w < 0:
        raise DomainError("need k, l >= -1 and w >= 0")
    lhs = p_cheb(k + w) * p_cheb(l + w) - (p_cheb(k) * p_cheb(l)).shift(2 * w)
    rhs = p_cheb(w - 1) * p_cheb(k + l + w + 1)
    return lhs == rhs


# -- tridiagonal transfer matrices --

class TriMatrix:
    """(k+1)x(k+1) tridiagonal matrix with every band entry equal to x.

    kind "A" is the full band, "B" zeroes the lower-right corner (no level
    step at the top height), "C" zeroes the upper-left corner (no level step
    at height 0).
    """

    def __init__(self, kind: str, k: int):
        if kind not in ("A", "B", "C"):
            raise DomainError(f"unknown matrix kind {kind!r}")
        if k < 0:
            raise DomainError("matrix index k must be >= 0")
        self.kind, self.k = kind, k
        size = k + 1
        rows = [[ZERO] * size for _ in range(size)]
        for i in range(size):
            for j in range(max(0, i - 1), min(size, i + 2)):
                rows[i][j] = X
        if kind == "B":
            rows[k][k] = ZERO
        elif kind == "C":
            rows[0][0] = ZERO
        self.rows: list[list[IntPoly]] = rows

    @property
    def size(self) -> int:
        return self.k + 1

    def __getitem__(self, ij: tuple[int, int]) -> IntPoly:
        i, j = ij
        return self.rows[i][j]

    def i_minus(self) -> list[list[IntPoly]]:
        n = self.size
        return [[(ONE if i == j else ZERO) - self.rows[i][j] for j in range(n)] for i in range(n)]


def tri_matrix(kind: str, k: int) -> TriMatrix:
    return TriMatrix(kind, k)


def det(rows: Sequence[Sequence[IntPoly]]) -> IntPoly:
    """Determinant over Z[x] by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return ONE
    sign, prev = 1, ONE
    for c in range(n - 1):
        if not m[c][c]:
            for r in range(c + 1, n):
                if m[r][c]:
                    m[c], m[r] = m[r], m[c]
                    sign = -sign
                    break
            else:
                return ZERO
        piv = m[c][c]
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                m[r][j] = (piv * m[r][j] - m[r][c] * m[c][j]).exact_div(prev)
            m[r][c] = ZERO
        prev = piv
    return m[n - 1][n - 1] * sign


def det_and_minor(m: TriMatrix, s: int, r: int) -> tuple[IntPoly, IntPoly]:
    """det(I - m) and the minor of I - m with row s and column r deleted."""
    if not (0 <= s <= m.k and 0 <= r <= m.k):
        raise DomainError(f"minor indices ({s}, {r}) out of range for k = {m.k}")
    full = m.i_minus()
    minor = [[v for j, v in enumerate(row) if j != r] for i, row in enumerate(full) if i != s]
    return det(full), det(minor)


_FAMILY_KIND = {"M": "A", "N": "B", "O": "C"}


def bounded_path_gf(family: str, r: int, s: int, k: int) -> RatFunc:
    """Length generating function for paths from height r to s inside [0, k].

    Family M allows every step; N bans level steps at height k; O bans
    level steps at height 0.
    """
    if family not in _FAMILY_KIND:
        raise DomainError(f"unknown path family {family!r}")
    if not (0 <= r <= k and 0 <= s <= k):
        raise DomainError(f"heights r={r}, s={s} must lie in [0, {k}]")
    d, minor = det_and_minor(TriMatrix(_FAMILY_KIND[family], k), s, r)
    return RatFunc(minor * (-1) ** (r + s), d)
