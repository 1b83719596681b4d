"""
Counts read off Taylor coefficients in ``eta = -c_nu t``.

``z0(eta)`` solves ``z0 = 1 + eta z0^nu``; a partial-fraction vector is
composed with it and ``N(j) = (j-j_G)! c_nu^(j-j_G) [eta^(j-j_G)] G^(j_G)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .coefficients import LaurentVector, ModelSpec, c_nu


@dataclass(frozen=True)
class PowerSeries:
    """Truncated series ``sum_{k<=order} coeffs[k] eta^k`` with exact coefficients."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))
        if not self.coeffs:
            raise ValueError("a power series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c, order: int) -> "PowerSeries":
        return cls([c] + [0] * order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"series known only to order {self.order}")
        return PowerSeries(self.coeffs[: order + 1])

    def _match(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries.constant(other, self.order), self.order
        return other, min(self.order, other.order)

    def __add__(self, other):
        other, n = self._match(other)
        return PowerSeries([self[k] + other[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        other, n = self._match(other)
        return PowerSeries([self[k] - other[k] for k in range(n + 1)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            other = Fraction(other)
            return PowerSeries([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = Fraction(0)
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc += a[i] * b[k - i]
            out.append(acc)
        return PowerSeries(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.reciprocal() ** (-e)
        result = PowerSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def reciprocal(self) -> "PowerSeries":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series has no constant term")
        inv = [1 / a[0]]
        for k in range(1, len(a)):
            inv.append(-sum((a[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0)) / a[0])
        return PowerSeries(inv)

    def derivative(self) -> "PowerSeries":
        return PowerSeries([k * self.coeffs[k] for k in range(1, len(self.coeffs))] or [0])

    def integral(self) -> "PowerSeries":
        return PowerSeries([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def log(self) -> "PowerSeries":
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        if self.order == 0:
            return PowerSeries([0])
        return (self.derivative() * self.truncate(self.order - 1).reciprocal()).integral()


def solve_string(nu: int, order: int) -> PowerSeries:
    """``z0(eta)`` through ``eta^order`` by Lagrange inversion of ``w = eta (1+w)^nu``."""
    if nu < 2 or order < 0:
        raise ValueError("need nu >= 2 and order >= 0")
    coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        # [eta^n] w = (1/n) [w^(n-1)] (1+w)^(nu n)
        coeffs.append(Fraction(comb(nu * n, n - 1), n))
    return PowerSeries(coeffs)


def string_residual(nu: int, z0: PowerSeries) -> PowerSeries:
    eta = PowerSeries([0, 1] + [0] * (z0.order - 1)) if z0.order >= 1 else PowerSeries([0])
    return 1 - z0 + eta * z0 ** nu


def compose_model(v: LaurentVector, z0: PowerSeries) -> PowerSeries:
    """Series of ``z0^(j nu + 1) sum_i v_i (nu - (nu-1) z0)^-(base + i)``.

    For ``e_g`` itself (order 0 of the regular family) there is no ``z0``
    prefactor; the constant ``C^(g)`` is omitted.
    """
    nu = v.spec.nu
    w = nu - (nu - 1) * z0
    inv = w.reciprocal()
    power = inv ** v.base_power
    acc = PowerSeries.constant(0, z0.order)
    for c in v.coeffs:
        if c:
            acc = acc + power * c
        power = power * inv
    if v.is_e_function:
        return acc
    return acc * z0 ** (v.deriv_order * nu + 1)


def _guarded(j):
    # two extra orders, computed and discarded
    return j + 2


def count_series(spec: ModelSpec, v: LaurentVector, j: int) -> int:
    if v.spec != spec:
        raise ValueError("vector does not belong to the given model")
    k = j - v.deriv_order
    if k < 0:
        raise ValueError(f"j = {j} below the vector's order {v.deriv_order}")
    if v.is_e_function and j == 0:
        raise ValueError("j = 0 regular counts need the constant C^(g)")
    z0 = solve_string(spec.nu, _guarded(k))
    series = compose_model(v, z0)
    total = factorial(k) * c_nu(spec.nu) ** k * series[k]
    if total.denominator != 1:
        raise ArithmeticError(f"series coefficient gave non-integer count {total}")
    return total.numerator


def genus0_two_legged(nu: int, j: int) -> int:
    """``j! c_nu^j [eta^j] z0``, the planar two-legged count."""
    z0 = solve_string(nu, _guarded(j))
    return int(factorial(j) * c_nu(nu) ** j * z0[j])


def count_e1_series(nu: int, j: int) -> int:
    """Regular genus-one count from ``e_1 = -log(nu - (nu-1) z0) / 12``."""
    if j < 1:
        raise ValueError("j must be >= 1")
    z0 = solve_string(nu, _guarded(j))
    e1 = (nu - (nu - 1) * z0).log() * Fraction(-1, 12)
    total = factorial(j) * c_nu(nu) ** j * e1[j]
    if total.denominator != 1:
        raise ArithmeticError(f"series coefficient gave non-integer count {total}")
    return total.numerator
