"""
Dominant large-``j`` terms of the map counts and the ratio of exact counts to them.

Everything is exact until the last division, which is done in mpmath at
``PRECISION`` significant digits.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

import mpmath

from .coefficients import Family, LaurentVector, ModelSpec, load_builtin
from .four_valent import derive_closed_form
from .recurrence import invert_step

PRECISION = 40


@dataclass(frozen=True)
class AsymptoticParams:
    nu: int
    genus: int
    family: Family
    s_c: Fraction
    leading_coeff: Fraction
    # twice the Gamma argument, kept integral
    gamma_twice: int

    @property
    def gamma_arg(self) -> Fraction:
        return Fraction(self.gamma_twice, 2)


def critical_point(nu: int, c: int) -> Fraction:
    return Fraction((nu - 1) ** (nu - 1), c * nu ** nu)


def e_leading_from_z(a_top: Fraction, g: int, nu: int) -> Fraction:
    return Fraction(a_top) / ((5 * g - 5) * (5 * g - 3) * nu ** 2)


def params_for(spec: ModelSpec, z_vector: LaurentVector | None = None) -> AsymptoticParams:
    """``z_vector`` is the order-0 two-legged vector of the same genus; builtin if omitted."""
    g, nu = spec.genus, spec.nu
    if spec.family is Family.REGULAR and g < 2:
        raise ValueError("regular asymptotics need g >= 2")
    if g < 1:
        raise ValueError("two-legged asymptotics need g >= 1")
    if z_vector is None:
        if nu != 2:
            raise LookupError(f"no builtin data for nu = {nu}; pass an imported two-legged vector")
        z_vector = load_builtin(Family.TWO_LEGGED, g)
    if z_vector.spec != ModelSpec(Family.TWO_LEGGED, nu, g) or z_vector.deriv_order != 0:
        raise ValueError("need the order-0 two-legged vector of the same genus and nu")
    a_top = z_vector.full()[-1]
    if spec.family is Family.TWO_LEGGED:
        lead, twice = a_top, 5 * g - 1
    else:
        lead, twice = e_leading_from_z(a_top, g, nu), 5 * g - 5
    if lead <= 0:
        raise ArithmeticError(f"leading coefficient {lead} is not positive")
    return AsymptoticParams(nu, g, spec.family, critical_point(nu, spec.c_nu), lead, twice)


def e_leading_by_inversion(g: int) -> Fraction:
    """Last ``b_l`` of the builtin regular vector stepped back to ``e_g``."""
    return invert_step(load_builtin(Family.REGULAR, g)).coeffs[-1]


def gamma_half(twice: int) -> mpmath.mpf:
    """``Gamma(twice / 2)`` via factorials and a single ``sqrt(pi)``."""
    if twice < 1:
        raise ValueError("argument must be positive")
    k, odd = divmod(twice, 2)
    if not odd:
        return mpmath.mpf(factorial(k - 1))
    # Gamma(k + 1/2) = (2k-1)!! sqrt(pi) / 2^k
    dfact = 1
    for i in range(1, 2 * k, 2):
        dfact *= i
    return mpmath.mpf(dfact) * mpmath.sqrt(mpmath.pi) / mpmath.mpf(2) ** k


def _mpq(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


def n_infinity(params: AsymptoticParams, j: int) -> mpmath.mpf:
    if j < 1:
        raise ValueError("j must be >= 1")
    nu = params.nu
    with mpmath.workdps(PRECISION):
        exact = factorial(j) * params.leading_coeff / params.s_c ** j
        if params.family is Family.TWO_LEGGED:
            exact *= Fraction(nu, nu - 1)
        scale = mpmath.sqrt(_mpq(Fraction(2 * nu, nu - 1))) ** params.gamma_twice
        power = mpmath.power(j, mpmath.mpf(params.gamma_twice - 2) / 2)
        return +(_mpq(exact) * power / (scale * gamma_half(params.gamma_twice)))


def ratio(count: int, params: AsymptoticParams, j: int) -> mpmath.mpf:
    with mpmath.workdps(PRECISION):
        return +(mpmath.mpf(count) / n_infinity(params, j))


@dataclass(frozen=True)
class RatioRow:
    family: Family
    genus: int
    j: int
    ratio: mpmath.mpf

    def csv(self, digits: int = 12) -> str:
        return f"{self.family.value},{self.genus},{self.j},{mpmath.nstr(self.ratio, digits, strip_zeros=False)}"


def ratio_table(spec: ModelSpec, j_values: Sequence[int],
                counter: Callable[[int], int] | None = None) -> list[RatioRow]:
    """Exact count over dominant term; counts default to the derived closed form (``nu = 2``)."""
    if counter is None:
        counter = derive_closed_form(spec)
    params = params_for(spec)
    return [RatioRow(spec.family, spec.genus, j, ratio(counter(j), params, j)) for j in j_values]


CSV_HEADER = "family,genus,j,ratio"
