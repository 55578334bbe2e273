from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from wienerlab.polynomial import (
    Poly,
    analyze_sequence,
    factor_negative_rational_roots,
    poly_from_json,
    poly_to_json,
    q_analog,
)

coeff_lists = st.lists(st.integers(-50, 50), max_size=8)


def test_construction_trims_trailing_zeros():
    assert Poly((1, 2, 0, 0)) == Poly((1, 2))
    assert Poly((0, 0)).is_zero
    assert Poly(()).degree == 0  # zero polynomial maps to degree 0


def test_binomial_square():
    one_plus_q = Poly((1, 1))
    assert one_plus_q * one_plus_q == Poly((1, 2, 1))
    assert one_plus_q * one_plus_q * one_plus_q == Poly((1, 3, 3, 1))


def test_scale_and_shift():
    p = Poly((0, 2, 1))  # 2q + q^2
    assert 2 * p == Poly((0, 4, 2))
    assert p.scale(2).shift(0) == Poly((0, 4, 2))
    assert p.shift(2) == Poly((0, 0, 0, 2, 1))


def test_int_mixing():
    p = Poly((0, 15, 30))
    assert 2 * p + 10 == Poly((10, 30, 60))
    assert p - Poly((0, 15, 30)) == Poly(())


def test_derivative_at_one():
    assert Poly((0, 15, 30)).derivative_at_one() == 75
    assert Poly((7,)).derivative_at_one() == 0
    assert Poly((0, 9, 12, 12, 12)).derivative_at_one() == 117


def test_q_analog():
    assert q_analog(0).is_zero
    assert q_analog(1) == Poly((1,))
    assert q_analog(4) == Poly((1, 1, 1, 1))
    assert q_analog(5).evaluate(1) == 5


def test_evaluate_with_fractions():
    p = Poly((1, 6, 11, 6))
    assert p.evaluate(Fraction(-1, 2)) == 0
    assert p.evaluate(1) == 24


@given(coeff_lists, coeff_lists)
def test_mul_commutes(a, b):
    assert Poly(tuple(a)) * Poly(tuple(b)) == Poly(tuple(b)) * Poly(tuple(a))


@given(coeff_lists, coeff_lists, coeff_lists)
def test_mul_associates(a, b, c):
    pa, pb, pc = Poly(tuple(a)), Poly(tuple(b)), Poly(tuple(c))
    assert (pa * pb) * pc == pa * (pb * pc)


@given(coeff_lists, coeff_lists)
def test_derivative_product_rule_at_one(a, b):
    f, g = Poly(tuple(a)), Poly(tuple(b))
    lhs = (f * g).derivative_at_one()
    rhs = f.derivative_at_one() * g.evaluate(1) + f.evaluate(1) * g.derivative_at_one()
    assert lhs == rhs


def test_analyze_increasing_plateau():
    verdict = analyze_sequence(Poly((0, 9, 12, 12, 12)), start=1)
    assert verdict.unimodal
    assert verdict.peak_range == (2, 4)
    assert verdict.log_concave


def test_analyze_simple_cases():
    up_down = analyze_sequence(Poly((1, 3, 2)))
    assert up_down.unimodal and up_down.log_concave

    valley = analyze_sequence(Poly((2, 1, 2)))
    assert not valley.unimodal
    assert valley.peak_range is None
    assert not valley.log_concave and valley.first_violation == 1


def test_analyze_window_offsets():
    # the leading structural zero must not spoil the window verdict
    p = Poly((0, 5, 5))
    assert analyze_sequence(p, start=1).log_concave
    assert analyze_sequence(p, start=1).peak_range == (1, 2)


def test_analyze_empty_window():
    verdict = analyze_sequence(Poly(()), start=0)
    assert verdict.unimodal and verdict.log_concave and verdict.peak_range is None


def test_factor_cube_of_linear():
    assert factor_negative_rational_roots(Poly((8, 24, 24, 8))) == (Fraction(-1),) * 3


def test_factor_distinct_roots():
    roots = factor_negative_rational_roots(Poly((1, 6, 11, 6)))
    assert roots == (Fraction(-1), Fraction(-1, 2), Fraction(-1, 3))


def test_factor_absent_for_complex_roots():
    assert factor_negative_rational_roots(Poly((1, 1, 1))) is None


def test_factor_absent_for_positive_root():
    # q^2 - 3q + 2 = (q-1)(q-2): rational but positive roots
    assert factor_negative_rational_roots(Poly((2, -3, 1))) is None


def test_factor_constant_and_monomial():
    assert factor_negative_rational_roots(Poly((5,))) == ()
    assert factor_negative_rational_roots(Poly((0, 1))) is None  # root 0


@given(st.lists(st.integers(1, 9), min_size=1, max_size=6), st.integers(1, 4))
def test_factor_recovers_linear_products(exponent_list, lead):
    poly = Poly((lead,))
    for e in exponent_list:
        poly = poly * Poly((1, e))
    expected = tuple(sorted(Fraction(-1, e) for e in exponent_list))
    assert factor_negative_rational_roots(poly) == expected
    verdict = analyze_sequence(poly)
    assert verdict.neg_rational_roots == expected
    assert verdict.log_concave and verdict.unimodal


@given(st.lists(st.integers(0, 30), min_size=1, max_size=10))
def test_implication_chain(coeffs):
    poly = Poly(tuple(coeffs))
    if poly.is_zero:
        return
    verdict = analyze_sequence(poly)
    if verdict.neg_rational_roots is not None:
        assert verdict.log_concave
    if verdict.log_concave and all(c > 0 for c in poly.coeffs):
        assert verdict.unimodal


def test_json_round_trip_small_and_big():
    small = Poly((0, 15, 30))
    assert poly_from_json(poly_to_json(small)) == small
    big = Poly((2**60, 1))
    obj = poly_to_json(big)
    assert isinstance(obj["coeffs"][0], str)
    assert poly_from_json(obj) == big


def test_str_rendering():
    assert str(Poly(())) == "0"
    assert str(Poly((0, 15, 30))) == "15q + 30q^2"
    assert str(Poly((2, -3))) == "2 - 3q"
