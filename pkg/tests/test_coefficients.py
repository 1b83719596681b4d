import hashlib
import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from mapcount.coefficients import (CoefficientError, Family, LaurentVector, ModelSpec, builtin_keys,
                                   builtin_text, c_nu, export_vector, format_rational, from_full,
                                   import_vector, load_builtin, parse_rational, zero_vector)

DATA_SHA256 = "83ce4448392c01e3e96f79be57998ad997c9cfac0ad05be742727c85b8eba146"

BUILTINS = [(Family.TWO_LEGGED, g) for g in range(1, 8)] + [(Family.REGULAR, g) for g in range(2, 8)]


def test_data_checksum():
    assert hashlib.sha256(builtin_text().encode()).hexdigest() == DATA_SHA256


def test_builtin_keys():
    assert builtin_keys() == BUILTINS


def test_c_nu():
    assert [c_nu(n) for n in (2, 3, 4)] == [12, 60, 280]


@pytest.mark.parametrize("family,g,alpha,beta,j_init", [
    (Family.TWO_LEGGED, 1, 2, 2, 0),
    (Family.TWO_LEGGED, 4, 11, 8, 0),
    (Family.REGULAR, 2, 2, 3, 1),
    (Family.REGULAR, 5, 11, 9, 1),
])
def test_model_parameters(family, g, alpha, beta, j_init):
    spec = ModelSpec(family, 2, g)
    assert (spec.alpha, spec.beta, spec.j_init) == (alpha, beta, j_init)
    assert spec.j_zero == beta - 1
    assert spec.band_len == alpha + beta == (5 * g - 1 if family is Family.TWO_LEGGED else 5 * g - 5)


def test_fast_path_validity():
    assert ModelSpec(Family.TWO_LEGGED, 2, 1).fast_path_valid
    assert ModelSpec(Family.REGULAR, 2, 2).fast_path_valid
    assert not ModelSpec(Family.REGULAR, 2, 1).fast_path_valid


def test_band_len_only_for_nu_2():
    assert ModelSpec(Family.TWO_LEGGED, 3, 2).band_len is None


@pytest.mark.parametrize("nu,g", [(1, 1), (2, 0)])
def test_bad_spec(nu, g):
    with pytest.raises(CoefficientError):
        ModelSpec(Family.TWO_LEGGED, nu, g)


def test_family_parse():
    assert Family.parse("Z") is Family.TWO_LEGGED
    assert Family.parse(Family.REGULAR) is Family.REGULAR
    with pytest.raises(CoefficientError):
        Family.parse("x")


def test_builtin_z1():
    assert load_builtin(Family.TWO_LEGGED, 1).coeffs == (0, F(2, 3), F(-4, 3), F(2, 3))


def test_builtin_z2():
    assert load_builtin("z", 2).coeffs == (0, 0, 0, -14, F(700, 9), F(-1540, 9), F(560, 3), F(-910, 9), F(196, 9))


def test_builtin_e2():
    assert load_builtin("e", 2).coeffs == (0, F(-13, 3), 18, -23, F(28, 3))


@pytest.mark.parametrize("family,g", [(Family.REGULAR, 1), (Family.TWO_LEGGED, 8), (Family.REGULAR, 0)])
def test_no_builtin(family, g):
    with pytest.raises(CoefficientError, match="no builtin data"):
        load_builtin(family, g)


@pytest.mark.parametrize("family,g", BUILTINS)
def test_builtin_shape(family, g):
    v = load_builtin(family, g)
    spec = v.spec
    assert v.deriv_order == spec.j_init
    assert len(v) == spec.band_len
    lead = next(i for i, c in enumerate(v.coeffs) if c)
    assert lead == spec.j_zero - spec.j_init
    assert v.base_power == spec.window_base(spec.j_init)


@pytest.mark.parametrize("g", range(1, 8))
def test_z_leading_coefficient_positive(g):
    assert load_builtin("z", g).full()[-1] > 0


def test_full_view_is_unpadded():
    v = load_builtin("z", 2)
    assert len(v.full()) == v.spec.alpha + 1
    assert v.full()[-1] == F(196, 9)


def test_sum_at_one():
    v = load_builtin("z", 1)
    assert v.total() == 0


def test_zero_vector():
    v = zero_vector(ModelSpec(Family.TWO_LEGGED, 2, 3))
    assert v.is_zero() and len(v) == 14


def test_from_full_length_limit():
    spec = ModelSpec(Family.TWO_LEGGED, 2, 1)
    with pytest.raises(CoefficientError, match="exceed"):
        from_full(spec, 0, [1, 2, 3, 4])


def test_general_nu_vector_grows():
    spec = ModelSpec(Family.TWO_LEGGED, 3, 1)
    v = from_full(spec, 2, [1])
    assert len(v) == spec.alpha + 3 and v.base_power == spec.beta + 2


@pytest.mark.parametrize("text,value", [("3", F(3)), ("-910/9", F(-910, 9)), ("+4/6", F(2, 3)), (" 0 ", F(0))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["7/0", "1.5", "1/-2", "", "abc", "1e3"])
def test_parse_rational_rejects(text):
    with pytest.raises(CoefficientError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(F(-910, 9)) == "-910/9"
    assert format_rational(F(4)) == "4"


def _doc(**overrides):
    d = {"family": "z", "nu": 2, "genus": 2, "deriv_order": 0, "base_power": 4,
         "coeffs": ["-14", "700/9", "-1540/9", "560/3", "-910/9", "196/9"]}
    d.update(overrides)
    return json.dumps(d)


def test_import_matches_builtin():
    assert import_vector(_doc()) == load_builtin("z", 2)


def test_import_whitespace_insensitive():
    assert import_vector("\n  " + _doc().replace(",", " ,\n ") + "\n") == load_builtin("z", 2)


@pytest.mark.parametrize("overrides,match", [
    ({"coeffs": ["1"] * 7}, "exceed"),
    ({"coeffs": ["7/0"]}, "zero denominator"),
    ({"coeffs": []}, "empty"),
    ({"nu": 1}, "nu must be"),
    ({"base_power": 3}, "base_power"),
    ({"family": "q"}, "unknown family"),
    ({"extra": 1}, "unknown fields"),
    ({"coeffs": [1, 2]}, "array of strings"),
    ({"genus": "2"}, "integer"),
])
def test_import_rejects(overrides, match):
    with pytest.raises(CoefficientError, match=match):
        import_vector(_doc(**overrides))


def test_import_missing_field():
    d = json.loads(_doc())
    del d["coeffs"]
    with pytest.raises(CoefficientError, match="missing"):
        import_vector(json.dumps(d))


def test_import_not_json():
    with pytest.raises(CoefficientError, match="JSON"):
        import_vector("z 2: 1, 2")


def test_export_entry_format():
    assert '"-910/9"' in export_vector(load_builtin("z", 2))


@pytest.mark.parametrize("family,g", BUILTINS)
def test_round_trip_builtin(family, g):
    v = load_builtin(family, g)
    text = export_vector(v)
    again = import_vector(text)
    assert again == v
    assert export_vector(again) == text


def test_export_is_deterministic_json():
    text = export_vector(load_builtin("e", 2))
    assert text.endswith("\n")
    assert json.loads(text)["coeffs"] == ["-13/3", "18", "-23", "28/3"]


rationals = st.builds(F, st.integers(-10 ** 12, 10 ** 12), st.integers(1, 10 ** 6))


@given(st.integers(1, 4), st.integers(2, 4), st.integers(0, 3), st.data())
def test_round_trip_random(g, nu, j, data):
    spec = ModelSpec(Family.TWO_LEGGED, nu, g)
    q = data.draw(st.lists(rationals, min_size=1, max_size=spec.alpha + j + 1))
    # nu = 2 windows need the low slots empty once the band has slid
    if nu == 2:
        skip = spec.window_base(j) - (spec.beta + j)
        q = [F(0)] * max(0, skip) + q[max(0, skip):]
    v = from_full(spec, j, q)
    assert import_vector(export_vector(v)) == v


def test_e_function_document():
    b = LaurentVector(ModelSpec(Family.REGULAR, 2, 2), 0, 2, (F(-13, 72), F(1, 2), F(-23, 48), F(7, 45)))
    assert import_vector(export_vector(b)) == b
