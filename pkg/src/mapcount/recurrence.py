"""
Evolution of partial-fraction coefficients under differentiation in ``t``.

If ``G^(j)`` has coefficients ``q_l^(j-1)`` at order ``j-1``, then

    q_l^(j) = nu (beta + l + j - 2) q_{l-1}^(j-1) - (beta + l - 1 - (nu-1)(j-1)) q_l^(j-1)

with ``q_{-1} = 0``.  Counts are ``c_nu^(j - j_G)`` times the plain sum of the
coefficients, since every power of ``nu - (nu-1) z0`` equals 1 at ``z0 = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coefficients import CoefficientError, Family, LaurentVector, ModelSpec, from_full


class RecurrenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class StepIndex:
    """Row whose diagonal entry vanishes in ``M^(n+1)``."""

    n: int
    delta: int

    @classmethod
    def of(cls, n: int, nu: int, beta: int) -> "StepIndex":
        return cls(n, n * (nu - 1) - beta + 2)


def m_entry(n: int, nu: int, beta: int, k: int, i: int) -> int:
    """Entry ``[k, i]`` (1-based) of the sub-diagonal step matrix ``M^(n)``."""
    if i == k:
        return n * (nu - 1) - (beta + k + nu - 3)
    if i == k - 1:
        return nu * (beta + k + n - 3)
    return 0


def _diag(nu, beta, j, ell):
    # coefficient of q_l^(j-1) in q_l^(j)
    return -(beta + ell - 1 - (nu - 1) * (j - 1))


def _sub(nu, beta, j, ell):
    # coefficient of q_{l-1}^(j-1) in q_l^(j)
    return nu * (beta + ell + j - 2)


def _derivative_of_e(v: LaurentVector) -> LaurentVector:
    # -de_g/dt = c z0^(nu+1) sum (nu-1)(2g-2+l) b_l w^-(2g+l); the stored
    # order-1 vectors carry that single factor of c.
    spec = v.spec
    c = spec.c_nu
    q = [c * (spec.nu - 1) * (spec.beta - 1 + ell) * b for ell, b in enumerate(v.coeffs)]
    return from_full(spec, 1, q)


def advance(v: LaurentVector) -> LaurentVector:
    """Coefficients at derivative order ``j`` from those at ``j - 1``."""
    if v.is_e_function:
        return _derivative_of_e(v)
    spec = v.spec
    nu, beta = spec.nu, spec.beta
    j = v.deriv_order + 1
    old = v.full()
    new = []
    for ell in range(spec.alpha + j + 1):
        below = old[ell - 1] if ell >= 1 else 0
        here = old[ell] if ell < len(old) else 0
        new.append(_sub(nu, beta, j, ell) * below + _diag(nu, beta, j, ell) * here)
    try:
        return from_full(spec, j, new)
    except CoefficientError as exc:
        raise RecurrenceError(f"band structure violated at order {j}: {exc}") from None


def evolve(v: LaurentVector, j: int) -> LaurentVector:
    if j < v.deriv_order:
        raise ValueError(f"cannot evolve backwards from {v.deriv_order} to {j}")
    while v.deriv_order < j:
        v = advance(v)
    return v


def _require_integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise RecurrenceError(f"{what} is not an integer ({x}); coefficient data is corrupted")
    return x.numerator


def count_recurrence(spec: ModelSpec, v_init: LaurentVector, j: int) -> int:
    if v_init.spec != spec:
        raise ValueError("vector does not belong to the given model")
    if v_init.deriv_order != spec.j_init:
        raise ValueError(f"initial vector must be at order j_G = {spec.j_init}")
    if j < spec.j_init:
        raise ValueError(f"j = {j} below j_G = {spec.j_init}")
    if spec.nu == 2 and not spec.fast_path_valid:
        raise RecurrenceError("j_G > beta - 1: band reduction does not apply")
    total = evolve(v_init, j).total() * spec.c_nu ** (j - spec.j_init)
    return _require_integer(total, f"count for {spec.family.value} g={spec.genus} j={j}")


def invert_step(v: LaurentVector) -> LaurentVector:
    """Undo one :func:`advance`.

    For the regular family at order 1 this recovers the coefficients ``b_l``
    of ``e_g`` itself.  Otherwise the bidiagonal system is solved from the top
    down (the sub-diagonal never vanishes for ``j >= 1``), and the lowest
    equation, which is then overdetermined, is checked exactly.
    """
    spec = v.spec
    nu, beta = spec.nu, spec.beta
    j = v.deriv_order
    if spec.family is Family.REGULAR and j == 1:
        c = spec.c_nu
        b = []
        for ell, x in enumerate(v.full()):
            pivot = c * (nu - 1) * (beta - 1 + ell)
            if pivot == 0:
                raise RecurrenceError("non-invertible step")
            b.append(x / pivot)
        return LaurentVector(spec, 0, beta - 1, tuple(b))
    if j <= spec.j_init:
        raise ValueError(f"cannot invert below j_G = {spec.j_init}")

    target = v.full()  # length alpha + j + 1
    size = spec.alpha + j  # unknowns q_0 .. q_{alpha+j-1} at order j-1
    prev = [Fraction(0)] * (size + 1)  # sentinel q_size = 0
    for ell in range(size, 0, -1):
        sub = _sub(nu, beta, j, ell)
        if sub == 0:
            raise RecurrenceError("non-invertible step")
        prev[ell - 1] = (target[ell] - _diag(nu, beta, j, ell) * prev[ell]) / sub
    if _diag(nu, beta, j, 0) * prev[0] != target[0]:
        raise RecurrenceError("inconsistent vector: no predecessor maps onto it")
    try:
        return from_full(spec, j - 1, prev[:size])
    except CoefficientError as exc:
        raise RecurrenceError(f"inconsistent vector: {exc}") from None
