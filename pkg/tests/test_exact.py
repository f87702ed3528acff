from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from akzeta.exact import (
    GaussianRational,
    I,
    NonUnitError,
    PolyYW,
    TruncSeries1,
    TruncSeries2,
    euler_theta,
    exp_series,
    gr,
    poly_shift,
    series2_div,
    series2_mul,
    series_div,
    series_exp_linear,
    series_mul,
)

from conftest import small_gaussians, small_fractions

Y, W = PolyYW.y(), PolyYW.w()


@pytest.mark.parametrize(
    "text, re, im",
    [
        ("-4/125-22/125*i", Fraction(-4, 125), Fraction(-22, 125)),
        ("1+2i", 1, 2),
        ("i", 0, 1),
        ("-i", 0, -1),
        ("3/2", Fraction(3, 2), 0),
        ("-1/2+3*i", Fraction(-1, 2), 3),
    ],
)
def test_parse(text, re, im):
    z = GaussianRational.parse(text)
    assert (z.re, z.im) == (re, im)


@pytest.mark.parametrize("text", ["-4/125-22/125*i", "242", "-1/512", "i", "1-i", "2/3*i"])
def test_str_round_trip(text):
    assert str(GaussianRational.parse(text)) == text


def test_to_json_shape():
    z = GaussianRational.parse("-4/125-22/125*i")
    assert z.to_json() == {"re": {"num": -4, "den": 125}, "im": {"num": -22, "den": 125}}


def test_integer_equality_and_hash():
    assert gr(3) == 3
    assert hash(gr(3)) == hash(3)
    assert gr(Fraction(1, 2)) == Fraction(1, 2)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        gr(0).inverse()


@given(small_gaussians, small_gaussians, small_gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    if b:
        assert (a / b) * b == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a * a.conjugate()).im == 0


def test_i_squared():
    assert I * I == -1
    assert I ** 4 == 1
    assert I ** -1 == -I


# --- polynomials in (y, w) --------------------------------------------------


def test_canonical_string():
    p = W ** 2 - 2 * Y * W + 1
    assert str(p) == "w^2-2*y*w+1"
    assert str(PolyYW()) == "0"


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), small_gaussians, max_size=5))
    return PolyYW(terms)


@given(polys(), small_gaussians, small_gaussians, small_gaussians, small_gaussians)
def test_shift_composes(p, a, b, c, d):
    assert p.shift(a, b).shift(c, d) == p.shift(a + c, b + d)
    assert poly_shift(p, a, b) == p.shift(a, b)


@given(polys())
def test_swap_is_an_involution(p):
    assert p.swap().swap() == p


@given(polys(), polys(), small_gaussians, small_gaussians)
def test_evaluation_is_a_ring_homomorphism(p, q, y, w):
    assert (p * q).evaluate(y, w) == p.evaluate(y, w) * q.evaluate(y, w)
    assert (p + q).evaluate(y, w) == p.evaluate(y, w) + q.evaluate(y, w)


@given(polys(), small_gaussians)
def test_shift_matches_evaluation(p, a):
    assert p.shift(a, 0).evaluate(1, 2) == p.evaluate(1 + a, 2)


def test_substitute():
    p = Y * W + W
    assert p.substitute(Y, Y) == Y ** 2 + Y
    assert p.substitute(W, Y) == Y * W + Y
    assert p.substitute(PolyYW.const(2), -W - 1) == -3 * W - 3


def test_shift_binomial_expansion():
    assert (Y ** 2).shift(1, 0) == Y ** 2 + 2 * Y + 1


# --- truncated series --------------------------------------------------------


def test_product_difference_of_squares():
    a = TruncSeries1([1, 1, 0])
    b = TruncSeries1([1, -1, 0])
    assert series_mul(a, b).coeffs == [1, 0, -1]


def test_inverse_exponentials():
    e = series_exp_linear(W, 6)
    f = series_exp_linear(-W, 6)
    prod = series_mul(e, f)
    assert PolyYW.coerce(prod.coeffs[0]) == 1
    assert all(not PolyYW.coerce(c) for c in prod.coeffs[1:])


def test_exp_linear_coefficients():
    e = series_exp_linear(W, 2)
    assert [PolyYW.coerce(c) for c in e.coeffs] == [PolyYW.const(1), W, W ** 2 * Fraction(1, 2)]


def test_geometric_series():
    q = series_div(TruncSeries1([1, 0, 0, 0]), TruncSeries1([1, -1, 0, 0]))
    assert q.coeffs == [1, 1, 1, 1]


def test_division_by_non_unit():
    with pytest.raises(NonUnitError):
        series_div(TruncSeries1([1, 0]), TruncSeries1([0, 1]))


@given(st.lists(small_fractions, min_size=5, max_size=5), st.lists(small_fractions, min_size=5, max_size=5))
def test_division_round_trip(num, den):
    if den[0] == 0:
        den[0] = Fraction(1)
    a, b = TruncSeries1(num), TruncSeries1(den)
    assert series_mul(series_div(a, b), b) == a


def test_euler_theta():
    geo = TruncSeries1([1, 1, 1, 1])
    assert euler_theta(geo).coeffs == [0, 1, 2, 3]
    assert euler_theta(TruncSeries1([5, 0, 0])).coeffs == [0, 0, 0]
    # (1 + theta) 1/(1-z) = 1/(1-z)^2
    geo4 = TruncSeries1([1] * 5)
    assert (geo4 + euler_theta(geo4)).coeffs == series_mul(geo4, geo4).coeffs


def test_compose():
    # exp(1 - e^{-t}) = 1 + t + 0*t^2 + ...
    inner = TruncSeries1([0] + [-c for c in exp_series(4, -1).coeffs[1:]])
    outer = exp_series(4)
    comp = outer.compose(inner)
    assert comp.coeffs[:3] == [1, 1, 0]


def test_two_variable_separable_product():
    a = exp_series(3)
    b = exp_series(3)
    grid = TruncSeries2.outer(a, b)
    assert grid[2, 3] == Fraction(1, 2 * 6)
    one = TruncSeries2([[1]], 3, 3)
    assert series2_mul(grid, one).coeffs == grid.coeffs
    assert series2_div(series2_mul(grid, grid), grid).coeffs == grid.coeffs
