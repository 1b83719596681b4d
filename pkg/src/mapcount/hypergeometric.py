"""
Terminating hypergeometric sums and the hypergeometric count formulas.

Negative lower parameters follow the limit convention: the sum stops at the
first term where a non-positive integer upper parameter makes the numerator
vanish, and it is an error for a lower Pochhammer symbol to vanish earlier.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .coefficients import Family, LaurentVector, c_nu
from .recurrence import RecurrenceError, invert_step


class HypergeometricError(ArithmeticError):
    pass


def pochhammer(x, m: int) -> Fraction:
    """Rising factorial ``x (x+1) ... (x+m-1)``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    out = Fraction(1)
    x = Fraction(x)
    for i in range(m):
        out *= x + i
    return out


def binomial(n: int, k: int) -> int:
    """``C(n, k)`` for integer ``n`` of either sign; zero when ``k < 0``."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    # C(n, k) = (-1)^k C(k - n - 1, k)
    return (-1) ** k * comb(k - n - 1, k)


@dataclass(frozen=True)
class HypergeometricSpec:
    upper: tuple[int, ...]
    lower: tuple[int, ...]
    argument: Fraction

    def __init__(self, upper: Sequence[int], lower: Sequence[int], argument):
        object.__setattr__(self, "upper", tuple(upper))
        object.__setattr__(self, "lower", tuple(lower))
        object.__setattr__(self, "argument", Fraction(argument))

    def terms(self) -> int:
        """Number of terms before a numerator Pochhammer vanishes."""
        stops = [-a + 1 for a in self.upper if a <= 0]
        if not stops:
            raise HypergeometricError(f"series {self} does not terminate")
        return min(stops)


def terminating_pfq(spec: HypergeometricSpec) -> Fraction:
    x = spec.argument
    n = spec.terms()
    total = Fraction(0)
    term = Fraction(1)
    for m in range(n):
        if m:
            num = Fraction(1)
            for a in spec.upper:
                num *= a + m - 1
            den = Fraction(m)
            for b in spec.lower:
                den *= b + m - 1
            if den == 0:
                raise HypergeometricError(
                    f"lower parameter Pochhammer vanishes at m={m} before termination: undefined under convention")
            term = term * num * x / den
        total += term
    return total


def hyp2f1(a: int, b: int, c: int, x) -> Fraction:
    return terminating_pfq(HypergeometricSpec((a, b), (c,), x))


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise HypergeometricError(f"{what} is not an integer ({x}); coefficient data is corrupted")
    return x.numerator


def count_z_hg(nu: int, g: int, j: int, a_coeffs: LaurentVector) -> int:
    """Two-legged count from the coefficients ``a_l`` of ``z_g / z0``."""
    if g < 1 or j < 0:
        raise ValueError("need g >= 1 and j >= 0")
    _check(a_coeffs, Family.TWO_LEGGED, nu, g)
    if a_coeffs.deriv_order != 0:
        raise ValueError("count_z_hg needs the order-0 coefficients a_l")
    a = a_coeffs.full()
    x = Fraction(1, 1 - nu)
    total = Fraction(0)
    for ell, coeff in enumerate(a):
        if coeff:
            h = 2 * g - 2 + ell
            total += coeff * binomial(h + j, j) * hyp2f1(-j, -nu * j, -h - j, x)
    total *= factorial(j) * c_nu(nu) ** j * (nu - 1) ** j
    return _integral(total, f"N_{2 * nu},z({g},{j})")


def count_e_hg(nu: int, g: int, j: int, b_coeffs: LaurentVector) -> int:
    """Regular count (``g >= 2``) from the coefficients ``b_l`` of ``e_g``.

    ``b_coeffs`` may also be the stored order-1 vector, in which case it is
    stepped back to ``e_g`` first.
    """
    if g < 2 or j < 1:
        raise ValueError("need g >= 2 and j >= 1")
    _check(b_coeffs, Family.REGULAR, nu, g)
    if not b_coeffs.is_e_function:
        try:
            while not b_coeffs.is_e_function:
                b_coeffs = invert_step(b_coeffs)
        except RecurrenceError as exc:
            raise HypergeometricError(str(exc)) from None
    x = Fraction(1, 1 - nu)
    total = Fraction(0)
    for ell, coeff in enumerate(b_coeffs.coeffs):
        if coeff:
            h = 2 * g - 4 + ell
            total += coeff * binomial(h + j, j) * hyp2f1(-j, 1 - nu * j, -h - j, x)
    total *= factorial(j) * c_nu(nu) ** j * (nu - 1) ** j
    return _integral(total, f"N_{2 * nu},e({g},{j})")


def count_e1(nu: int, j: int) -> int:
    """Regular genus-one count for any even valence ``2 nu``."""
    if nu < 2 or j < 1:
        raise ValueError("need nu >= 2 and j >= 1")
    total = Fraction(0)
    first = binomial(nu * j - 1, j - 1)
    if first:
        total += (nu - 1) * first * terminating_pfq(
            HypergeometricSpec((1, 1, 1 - j), (2, (nu - 1) * j + 1), 1 - nu))
    second = binomial(nu * j - 1, j - 2)
    if second:
        total -= (nu - 1) ** 2 * second * terminating_pfq(
            HypergeometricSpec((1, 1, 2 - j), (2, (nu - 1) * j + 2), 1 - nu))
    total *= Fraction(factorial(j) * c_nu(nu) ** j, 12)
    return _integral(total, f"N_{2 * nu},e(1,{j})")


def _check(v: LaurentVector, family: Family, nu: int, g: int):
    if v.spec.family is not family or v.spec.nu != nu or v.spec.genus != g:
        raise ValueError(f"coefficients belong to {v.spec}, not ({family.value}, nu={nu}, g={g})")
