"""
The 4-valent fast path.

For ``nu = 2`` the coefficient band has a fixed length ``s`` and each step
acts through an upper bidiagonal ``s x s`` matrix ``A^(j)``.  All of these
commute and share the unipotent eigenbasis ``S``, so the product collapses
to a genus-independent row vector ``R^(j)`` and a count is
``12^(j - j_G) * R^(j) . X``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod

import sympy

from .coefficients import Family, LaurentVector, ModelSpec, load_builtin
from .hypergeometric import binomial, hyp2f1

J = sympy.Symbol("j", integer=True, nonnegative=True)


class FastPathError(ValueError):
    pass


def d_product(m: int, j: int, j_from: int = 0) -> int:
    """``prod_{l=j_from}^{j-1} 2 (2 l + m)``."""
    if j < j_from:
        raise ValueError("j must be >= j_from")
    return prod(2 * (2 * ell + m) for ell in range(j_from, j))


def d_closed_form(m: int, j: int) -> Fraction:
    """Factorial form of ``d_product(m, j, 0)`` for ``m >= 1``."""
    p, odd = divmod(m, 2)
    if odd:
        return Fraction(factorial(2 * j + 2 * p) * factorial(p),
                        factorial(2 * p) * factorial(j + p))
    return Fraction(4 ** j * factorial(j + p - 1), factorial(p - 1))


@dataclass(frozen=True)
class RowVector:
    j: int
    j_from: int
    entries: tuple[Fraction, ...]


def row_vector(j: int, j_from: int, s: int) -> RowVector:
    if s < 1 or j < j_from:
        raise ValueError("need s >= 1 and j >= j_from")
    d = [d_product(k, j, j_from) for k in range(1, s + 1)]
    entries = tuple(
        Fraction(sum(comb(n - 1, k - 1) * d[k - 1] for k in range(1, n + 1)), 2 ** (n - 1))
        for n in range(1, s + 1))
    return RowVector(j, j_from, entries)


def _fast_path_spec(spec: ModelSpec):
    if spec.nu != 2:
        raise FastPathError(f"fast path undefined for nu = {spec.nu} (only nu = 2)")
    if not spec.fast_path_valid:
        raise FastPathError(
            f"fast path needs j_G <= beta - 1; fails for {spec.family.value} genus {spec.genus}"
            " (regular genus 1 is counted by the genus-one hypergeometric formula instead)")


def count_contraction(spec: ModelSpec, v_init: LaurentVector, j: int) -> int:
    _fast_path_spec(spec)
    if v_init.spec != spec or v_init.deriv_order != spec.j_init:
        raise ValueError("initial vector must belong to spec at order j_G")
    if len(v_init) != spec.band_len:
        raise ValueError("initial vector must be padded to the band length")
    if j < spec.j_init:
        raise ValueError(f"j = {j} below j_G = {spec.j_init}")
    r = row_vector(j, spec.j_init, spec.band_len)
    total = sum((a * b for a, b in zip(r.entries, v_init.coeffs)), Fraction(0))
    total *= 12 ** (j - spec.j_init)
    if total.denominator != 1:
        raise ArithmeticError(f"contraction gave non-integer {total}; coefficient data is corrupted")
    return total.numerator


# -- matrices ---------------------------------------------------------------

Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class UnipotentBasis:
    size: int
    s: tuple[tuple[Fraction, ...], ...]
    s_inv: tuple[tuple[Fraction, ...], ...]


def basis(size: int) -> UnipotentBasis:
    if size < 1:
        raise ValueError("size must be >= 1")
    s = [[Fraction(0)] * size for _ in range(size)]
    s_inv = [[Fraction(0)] * size for _ in range(size)]
    for k in range(1, size + 1):
        for m in range(k):
            mag = Fraction(comb(k - 1, m), 2 ** m)
            s[k - m - 1][k - 1] = (-1) ** m * mag
            s_inv[k - m - 1][k - 1] = mag
    if matmul(s, s_inv) != identity(size):
        raise ArithmeticError("S * S^-1 is not the identity")
    return UnipotentBasis(size, tuple(map(tuple, s)), tuple(map(tuple, s_inv)))


def a_matrix(j: int, s: int) -> Matrix:
    a = [[Fraction(0)] * s for _ in range(s)]
    for k in range(1, s + 1):
        a[k - 1][k - 1] = Fraction(2 * (2 * j + k))
        if k < s:
            a[k - 1][k] = Fraction(-k)
    return a


def identity(n: int) -> Matrix:
    return [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]


def matmul(a, b) -> Matrix:
    # rows of a are mostly zero for the bidiagonal and triangular factors used here
    width = len(b[0])
    out = []
    for row in a:
        acc = [Fraction(0)] * width
        for k, x in enumerate(row):
            if x:
                for c, y in enumerate(b[k]):
                    if y:
                        acc[c] += x * y
        out.append(acc)
    return out


def matvec(a, v) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def count_by_matrices(spec: ModelSpec, v_init: LaurentVector, j: int) -> int:
    """Apply ``A^(j_G) .. A^(j-1)`` to the initial band and sum; slow cross-check."""
    _fast_path_spec(spec)
    x = list(v_init.coeffs)
    for k in range(spec.j_init, j):
        x = matvec(a_matrix(k, spec.band_len), x)
    total = sum(x, Fraction(0)) * 12 ** (j - spec.j_init)
    return int(total) if total.denominator == 1 else total


# -- closed forms -----------------------------------------------------------

@dataclass(frozen=True)
class ClosedFormCount:
    """``12^(j - j_G) * (poly_a(j) (2j)!/j! + poly_b(j) 4^j j!)``."""

    spec: ModelSpec
    poly_a: sympy.Poly
    poly_b: sympy.Poly

    def __call__(self, j: int) -> int:
        a = _eval(self.poly_a, j)
        b = _eval(self.poly_b, j)
        total = a * Fraction(factorial(2 * j), factorial(j)) + b * 4 ** j * factorial(j)
        total *= Fraction(12) ** (j - self.spec.j_init)
        if total.denominator != 1:
            raise ArithmeticError(f"closed form gave non-integer {total} at j={j}")
        return total.numerator

    def vanishing_points(self) -> list[int]:
        """Integers ``k >= j_G`` (below the polynomial degree) where both polynomials vanish."""
        top = max(self.poly_a.degree(), self.poly_b.degree())
        return [k for k in range(self.spec.j_init, top + 1)
                if _eval(self.poly_a, k) == 0 and _eval(self.poly_b, k) == 0]

    def expression(self) -> sympy.Expr:
        jG = self.spec.j_init
        return sympy.factor(12 ** (J - jG)) * (
            self.poly_a.as_expr() * sympy.factorial(2 * J) / sympy.factorial(J)
            + self.poly_b.as_expr() * 4 ** J * sympy.factorial(J))


def _eval(p: sympy.Poly, j: int) -> Fraction:
    v = p.eval(j)
    return Fraction(int(v.p), int(v.q))


def derive_closed_form(spec: ModelSpec, v_init: LaurentVector | None = None) -> ClosedFormCount:
    """Contract the row vector with the band symbolically in ``j``.

    Odd-indexed products are ``(2j)!/j!`` times a polynomial, even-indexed ones
    ``4^j j!`` times a polynomial; with ``j_G = 1`` the missing ``l = 0``
    factor ``2m`` is divided out.
    """
    _fast_path_spec(spec)
    if v_init is None:
        v_init = load_builtin(spec.family, spec.genus)
    x = v_init.coeffs
    s = spec.band_len
    # weight on d_k: sum_n X[n] C(n-1, k-1) / 2^(n-1)
    w = [sum((x[n - 1] * Fraction(comb(n - 1, k - 1), 2 ** (n - 1)) for n in range(k, s + 1)),
             Fraction(0)) for k in range(1, s + 1)]
    poly_a = sympy.Poly(0, J, domain="QQ")
    poly_b = sympy.Poly(0, J, domain="QQ")
    for k, wk in enumerate(w, start=1):
        if not wk:
            continue
        p, odd = divmod(k, 2)
        if odd:
            # d_{2p+1} = (2j)!/j! * prod_{i=1..p} (2j+2i-1) / (2p-1)!!
            scale = Fraction(1, prod(range(1, 2 * p, 2)))
            factors = [2 * J + 2 * i - 1 for i in range(1, p + 1)]
        else:
            # d_{2p} = 4^j j! * prod_{i=1..p-1} (j+i) / (p-1)!
            scale = Fraction(1, factorial(p - 1))
            factors = [J + i for i in range(1, p)]
        if spec.j_init == 1:
            scale /= 2 * k
        term = sympy.Poly(prod(factors, start=sympy.Integer(1)), J, domain="QQ") * sympy.Rational(
            (wk * scale).numerator, (wk * scale).denominator)
        if odd:
            poly_a += term
        else:
            poly_b += term
    return ClosedFormCount(spec, poly_a, poly_b)


def conjecture_sides(g: int, ell: int, j: int) -> tuple[int, int]:
    """Both sides of the conjectured ``2F1`` / binomial-sum identity."""
    h = 2 * g - 2 + ell
    lhs = factorial(j) * 2 ** (ell + 2 * g - 1) * binomial(h + j, j) * hyp2f1(-j, -2 * j, -h - j, -1)
    n = ell + 2 * g
    rhs = sum(comb(n - 1, k - 1) * d_product(k, j, 0) for k in range(1, n + 1))
    return lhs, rhs


def conjecture_check(g: int, ell: int, j: int) -> bool:
    lhs, rhs = conjecture_sides(g, ell, j)
    return lhs == rhs
