from fractions import Fraction as F

import mpmath
import pytest

from mapcount.asymptotics import (CSV_HEADER, critical_point, e_leading_by_inversion, gamma_half,
                                  n_infinity, params_for, ratio_table)
from mapcount.coefficients import Family, ModelSpec, from_full

Z = [(Family.TWO_LEGGED, g) for g in range(1, 8)]
E = [(Family.REGULAR, g) for g in range(2, 8)]
J_LIST = [32, 64, 128, 256, 512]

# |ratio(512) - 1| computed once from the exact counts, rounded up; the error
# shrinks roughly like j^(-1/2), so higher genera are still far from 1 here
BOUND_512 = {("z", 1): 0.05, ("z", 2): 0.12, ("z", 3): 0.19, ("z", 4): 0.27, ("z", 5): 0.36,
             ("z", 6): 0.44, ("z", 7): 0.52, ("e", 2): 0.07, ("e", 3): 0.14, ("e", 4): 0.21,
             ("e", 5): 0.29, ("e", 6): 0.38, ("e", 7): 0.46}


def test_critical_point():
    assert critical_point(2, 12) == F(1, 48)
    assert params_for(ModelSpec(Family.TWO_LEGGED, 2, 3)).s_c == F(1, 48)


def test_leading_coefficients():
    assert params_for(ModelSpec(Family.TWO_LEGGED, 2, 2)).leading_coeff == F(196, 9)
    p = params_for(ModelSpec(Family.REGULAR, 2, 2))
    assert p.leading_coeff == F(7, 45)
    assert p.gamma_arg == F(5, 2)


@pytest.mark.parametrize("g", range(2, 8))
def test_e_leading_relation(g):
    assert params_for(ModelSpec(Family.REGULAR, 2, g)).leading_coeff == e_leading_by_inversion(g)


@pytest.mark.parametrize("family,g", Z + E)
def test_leading_positive(family, g):
    assert params_for(ModelSpec(family, 2, g)).leading_coeff > 0


def test_params_errors():
    with pytest.raises(ValueError):
        params_for(ModelSpec(Family.REGULAR, 2, 1))
    with pytest.raises(LookupError):
        params_for(ModelSpec(Family.TWO_LEGGED, 3, 1))


def test_params_imported_vector():
    spec = ModelSpec(Family.TWO_LEGGED, 3, 1)
    p = params_for(spec, from_full(spec, 0, [0, 0, F(5, 2)]))
    assert p.leading_coeff == F(5, 2) and p.s_c == F(4, 60 * 27)


@pytest.mark.parametrize("twice", range(1, 16))
def test_gamma_half(twice):
    with mpmath.workdps(40):
        assert abs(gamma_half(twice) - mpmath.gamma(mpmath.mpf(twice) / 2)) < mpmath.mpf(10) ** -35


def test_n_infinity_positive():
    p = params_for(ModelSpec(Family.TWO_LEGGED, 2, 2))
    assert all(n_infinity(p, j) > 0 for j in range(1, 40))


def test_n_infinity_rejects_zero():
    with pytest.raises(ValueError):
        n_infinity(params_for(ModelSpec(Family.TWO_LEGGED, 2, 2)), 0)


@pytest.mark.parametrize("family,g", Z + E)
def test_ratio_converges(family, g):
    rows = ratio_table(ModelSpec(family, 2, g), J_LIST)
    err = [abs(r.ratio - 1) for r in rows]
    assert all(b < a for a, b in zip(err, err[1:]))
    assert err[-1] < BOUND_512[(family.value, g)]


def test_ratio_rows_small_j():
    rows = ratio_table(ModelSpec(Family.TWO_LEGGED, 2, 1), [1, 2, 3])
    assert [r.j for r in rows] == [1, 2, 3] and rows[0].ratio == 0


def test_csv_format():
    row = ratio_table(ModelSpec(Family.TWO_LEGGED, 2, 2), [32])[0]
    line = row.csv()
    assert line.startswith("z,2,32,0.")
    assert len(line.split(",")[3].replace("0.", "", 1)) == 12
    assert CSV_HEADER == "family,genus,j,ratio"
