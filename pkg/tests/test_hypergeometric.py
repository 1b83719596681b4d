from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from mapcount.coefficients import Family, LaurentVector, ModelSpec, from_full, load_builtin
from mapcount.four_valent import count_contraction
from mapcount.hypergeometric import (HypergeometricError, HypergeometricSpec, binomial, count_e1,
                                     count_e_hg, count_z_hg, hyp2f1, pochhammer, terminating_pfq)
from mapcount.recurrence import advance, count_recurrence, invert_step
from mapcount.tables import table_count


def test_pochhammer():
    assert pochhammer(-3, 2) == 6
    assert pochhammer(F(7, 3), 0) == 1
    assert pochhammer(-3, 4) == 0
    assert pochhammer(F(1, 2), 2) == F(3, 4)


def test_binomial_negative_top():
    assert binomial(-1, 3) == -1
    assert binomial(-3, 2) == 6
    assert binomial(5, -1) == 0
    assert binomial(3, 5) == 0


@pytest.mark.parametrize("upper,lower,x,value", [
    ((1, 1, 0), (2, 2), -1, 1),
    ((1, 1, -1), (2, 3), -1, F(7, 6)),
    ((-1, -2), (-1,), -1, 3),
])
def test_pfq_examples(upper, lower, x, value):
    assert terminating_pfq(HypergeometricSpec(upper, lower, x)) == value


def test_pfq_argument_zero():
    assert terminating_pfq(HypergeometricSpec((-5, 3), (2,), 0)) == 1


def test_pfq_non_terminating():
    with pytest.raises(HypergeometricError, match="terminate"):
        terminating_pfq(HypergeometricSpec((1, 2), (3,), F(1, 2)))


def test_pfq_lower_vanishes_first():
    with pytest.raises(HypergeometricError, match="undefined under convention"):
        hyp2f1(-3, 1, -1, 1)


@given(st.integers(0, 8), st.integers(-6, 6), st.integers(1, 6), st.fractions(max_denominator=5))
def test_pfq_matches_direct_sum(n, b, c, x):
    # with a positive lower parameter the convention reduces to the plain finite sum
    direct = sum(pochhammer(-n, m) * pochhammer(b, m) / (pochhammer(c, m) * pochhammer(1, m)) * x ** m
                 for m in range(n + 1))
    assert hyp2f1(-n, b, c, x) == direct


@pytest.mark.parametrize("g,j,value", [(1, 1, 0), (2, 3, 0), (1, 3, 62208)])
def test_count_z_hg(g, j, value):
    assert count_z_hg(2, g, j, load_builtin("z", g)) == value


def test_count_z_hg_rejects_wrong_order():
    with pytest.raises(ValueError, match="order-0"):
        count_z_hg(2, 1, 2, advance(load_builtin("z", 1)))


def test_count_z_hg_rejects_foreign_vector():
    with pytest.raises(ValueError):
        count_z_hg(2, 2, 2, load_builtin("z", 1))


def test_count_e_hg():
    spec = ModelSpec(Family.REGULAR, 2, 2)
    v = load_builtin("e", 2)
    assert count_e_hg(2, 2, 1, v) == 0
    assert count_e_hg(2, 2, 2, v) == count_contraction(spec, v, 2)
    assert count_e_hg(2, 3, 4, load_builtin("e", 3)) == table_count("e", 3, 4)


def test_count_e_hg_accepts_b_vector():
    v = load_builtin("e", 4)
    assert count_e_hg(2, 4, 7, invert_step(v)) == count_e_hg(2, 4, 7, v)


def test_count_e_hg_corrupt():
    v = load_builtin("e", 2)
    bad = LaurentVector(v.spec, 1, v.base_power, v.coeffs[:-1] + (v.coeffs[-1] + F(1, 7),))
    with pytest.raises(HypergeometricError):
        count_e_hg(2, 2, 3, bad)


@pytest.mark.parametrize("family,g", [(Family.TWO_LEGGED, g) for g in range(1, 8)]
                         + [(Family.REGULAR, g) for g in range(2, 8)])
def test_hg_equals_recurrence(family, g):
    spec = ModelSpec(family, 2, g)
    v = load_builtin(family, g)
    fn = count_z_hg if family is Family.TWO_LEGGED else count_e_hg
    for j in range(1, 13):
        assert fn(2, g, j, v) == count_recurrence(spec, v, j)


def test_count_e1_examples():
    assert count_e1(2, 1) == 1
    # census of the 105 matchings gives 60
    assert count_e1(2, 2) == 60
    assert count_e1(3, 1) == 10


def test_count_e1_table_row():
    assert all(count_e1(2, j) == table_count("e", 1, j) for j in range(1, 21))


def test_count_e1_rejects():
    with pytest.raises(ValueError):
        count_e1(2, 0)


@pytest.mark.parametrize("unit", range(3))
def test_general_nu_z_hg_matches_recurrence(unit):
    # the counts are linear in the vector, so agreement on a basis is the general statement
    spec = ModelSpec(Family.TWO_LEGGED, 3, 1)
    v = from_full(spec, 0, [int(i == unit) for i in range(spec.alpha + 1)])
    for j in range(0, 6):
        assert count_z_hg(3, 1, j, v) == count_recurrence(spec, v, j)
