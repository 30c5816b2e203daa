"""
Rational closed forms for the pattern families with Chebyshev expressions.

All formulas are written in terms of ``p_k = x^k U_k((1-x)/(2x))`` and
``q_k = p_k + x p_{k-1}``; each original ratio of U's is multiplied through
by the power of x that makes numerator and denominator integer polynomials.
"""

from __future__ import annotations

from ..errors import DomainError
from ..permcore import Permutation, layered
from ..polyalg import ONE, X, IntPoly, RatFunc, p_cheb, q_cheb

__all__ = [
    "decreasing_closed", "family_closed", "family_pattern", "FAMILIES",
    "layered_closed", "kT1_closed", "kiT1i_closed", "UnsupportedClosedForm",
]


class UnsupportedClosedForm(DomainError):
    """No closed form is implemented for these parameters; use ft_series."""


def decreasing_closed(m: int) -> RatFunc:
    """F for the single pattern m, m-1, ..., 1."""
    if m < 1:
        raise DomainError("pattern length must be >= 1")
    k, odd = (m + 1) // 2, m % 2
    if odd:
        return RatFunc(q_cheb(k - 1), q_cheb(k))
    return RatFunc(p_cheb(k - 1), p_cheb(k))


def _desc_prefix(k: int, tail: tuple[int, ...]) -> Permutation:
    # k, k-1, ..., len(tail)+1 followed by tail
    return tuple(range(k, len(tail), -1)) + tail


# name -> (pattern builder for parameter k, closed form for parameter k)
def _k312(k: int) -> RatFunc:
    return RatFunc(p_cheb(k - 2), p_cheb(k - 1))


def _k4132(k: int) -> RatFunc:
    return RatFunc(q_cheb(k - 2), q_cheb(k - 1))


def _k4123(k: int) -> RatFunc:
    lead = IntPoly([1, -1, 0, 1])
    tail = IntPoly([0, 0, -1, 1])  # (x - 1) x^2
    num = lead * p_cheb(k - 3) + tail * p_cheb(k - 4)
    den = lead * p_cheb(k - 2) + tail * p_cheb(k - 3)
    return RatFunc(num, den)


FAMILIES = {
    "k...312": (lambda k: _desc_prefix(k, (1, 2)), _k312),
    "k+1...4231": (lambda k: _desc_prefix(k + 1, (2, 3, 1)), _k312),
    "k...4213": (lambda k: _desc_prefix(k, (2, 1, 3)), _k4132),
    "k...4132": (lambda k: _desc_prefix(k, (1, 3, 2)), _k4132),
    "k...4123": (lambda k: _desc_prefix(k, (1, 2, 3)), _k4123),
}


def family_pattern(name: str, k: int) -> Permutation:
    _check_family(name, k)
    return FAMILIES[name][0](k)


def family_closed(name: str, k: int) -> RatFunc:
    _check_family(name, k)
    return FAMILIES[name][1](k)


def _check_family(name: str, k: int) -> None:
    if name not in FAMILIES:
        raise DomainError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}")
    if k < 3:
        raise DomainError(f"family {name} needs k >= 3, got {k}")


def layered_closed(*lengths: int) -> RatFunc:
    """Closed form for F of a layered pattern with one, two or three layers.

    Two layers [k, l] behave like the decreasing pattern of length k + l.
    Three layers are only handled when every layer has even length.
    """
    layered(*lengths)  # validates
    if len(lengths) <= 2:
        return decreasing_closed(sum(lengths))
    if len(lengths) == 3 and all(l % 2 == 0 for l in lengths):
        k1, k2, k3 = (l // 2 for l in lengths)
        s = k1 + k2 + k3
        a, b, c = k1 + k2, k1 + k3, k2 + k3
        num = p_cheb(s) * p_cheb(s - 1) + (p_cheb(a - 1) * p_cheb(b - 1) * p_cheb(c - 1)).shift(2)
        return RatFunc(num, p_cheb(a) * p_cheb(b) * p_cheb(c))
    raise UnsupportedClosedForm(f"no closed form for layered{list(lengths)}")


def kT1_closed(f: RatFunc) -> RatFunc:
    """F_{kT1} from F_T: 1 / (1 - x - x^2 F_T)."""
    return 1 / (1 - RatFunc(X) - RatFunc(X.shift(1)) * f)


def kiT1i_closed(f0: IntPoly, f1: IntPoly, i: int) -> RatFunc:
    """F after i applications of kT1 to a set T with F_T = f0 / f1."""
    if i < 1:
        raise DomainError("i must be >= 1")
    x2f0 = f0.shift(2)
    num = f1 * p_cheb(i - 1) - x2f0 * p_cheb(i - 2) if i >= 2 else f1 * ONE
    den = f1 * p_cheb(i) - x2f0 * p_cheb(i - 1)
    return RatFunc(num, den)
