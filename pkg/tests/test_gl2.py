from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from akzeta.classical import poly_bernoulli_B, poly_bernoulli_C
from akzeta.exact import GaussianRational, I, PolyYW, gr
from akzeta.gl2 import (
    DomainError,
    bigen_series,
    closed_form_hcprime,
    closed_form_hd,
    gl2_bernoulli,
    gl2_value,
    phi_p_coefficients,
    transform_invert,
    transform_scale,
    unigen_series,
    xi2k_exact,
)
from akzeta.moebius import G_ETA, G_XI, Matrix2, g_alpha, h_c_prime, h_d

from conftest import exact_matrices

Y, W = PolyYW.y(), PolyYW.w()


@pytest.mark.parametrize(
    "alpha, expected",
    [(3, "242"), (-2, "-1/512"), (I, "-4/125-22/125*i")],
)
def test_reflection_family_values(alpha, expected):
    g = g_alpha(alpha)
    target = GaussianRational.parse(expected)
    assert gl2_value(g, -3, 2, 1, 0) == target
    assert gl2_value(g, -2, 3, 1, 0) == target


def test_constant_term():
    grid = bigen_series(G_ETA, 0)
    assert grid[0][0] == 1


def test_grid_on_eta_gives_poly_bernoulli():
    grid = bigen_series(G_ETA, 8)
    for m in range(9):
        for l in range(9):
            assert grid[m][l].evaluate(1, 0) == poly_bernoulli_B(m, -l)
            assert grid[m][l].evaluate(1, -1) == poly_bernoulli_C(m, -l)
            if m:
                assert grid[m][l].evaluate(0, 0) == poly_bernoulli_C(m - 1, -l - 1)


@pytest.mark.parametrize("k", range(-3, 4))
def test_eta_values_for_all_indices(k):
    vals = [gl2_value(G_ETA, k, m, 1, 0) for m in range(9)]
    assert vals == [poly_bernoulli_B(m, k) for m in range(9)]


@pytest.mark.parametrize("k", range(-3, 4))
def test_xi_values(k):
    vals = [gl2_value(G_XI, k, m, 1, 0) for m in range(7)]
    assert vals == [(-1) ** m * poly_bernoulli_C(m, k) for m in range(7)]


def test_positive_index_needs_concrete_y():
    with pytest.raises(DomainError):
        gl2_value(G_ETA, 2, 3)


def test_g_one_equal_to_one_is_rejected():
    with pytest.raises(DomainError):
        bigen_series(Matrix2(1, 0, 0, 1), 3)


def test_strict_mode_rejects_inadmissible():
    with pytest.raises(DomainError):
        bigen_series(g_alpha(3), 3, strict=True)
    assert bigen_series(g_alpha(3), 3)[2][3] is not None


def test_degree_bounds():
    for g in (G_ETA, G_XI, g_alpha(I), Matrix2(1, -1, 1, 1)):
        grid = bigen_series(g, 7)
        for m in range(8):
            for l in range(8):
                assert grid[m][l].deg_w() <= m
                assert grid[m][l].deg_y() <= l


CORPUS = [G_ETA, G_XI, g_alpha(3), g_alpha(-2), g_alpha(I), h_d(3), h_c_prime(2), Matrix2(1, -1, 1, 1)]


@pytest.mark.parametrize("g", CORPUS, ids=str)
def test_two_expansions_agree(g):
    grid = bigen_series(g, 8)
    for l in range(9):
        uni = unigen_series(g, -l, 8)
        assert [grid[m][l] for m in range(9)] == uni


@given(exact_matrices(), st.integers(0, 4))
def test_two_expansions_agree_random(g, l):
    from akzeta.moebius import INF, ONE, act

    if act(g, ONE) == INF:
        return
    grid = bigen_series(g, 4, 4)
    assert [grid[m][l] for m in range(5)] == unigen_series(g, -l, 4)


@pytest.mark.parametrize("d", [1, 3, I, Fraction(-1, 2), 2])
def test_closed_form_hd(d):
    g = h_d(d)
    for l in range(6):
        for m in range(6):
            assert closed_form_hd(m, -l, d) == gl2_bernoulli(g, m, l)
            assert xi2k_exact(g, m + 1, -l, m) == gl2_bernoulli(g, m, l)


@pytest.mark.parametrize("c", [1, 2, I, Fraction(1, 3)])
def test_closed_form_hcprime(c):
    g = h_c_prime(c)
    for l in range(6):
        for m in range(6):
            assert closed_form_hcprime(m, -l, c) == gl2_bernoulli(g, m, l)
            assert xi2k_exact(g, m + 1, -l, m) == gl2_bernoulli(g, m, l)


def test_hcprime_sign_at_xi():
    # B_1^(1)(1, 0; g_xi) = -C_1^(1) = 1/2; the sign pattern (-1)^j instead of (-1)^(n-j) gives 3/2
    assert closed_form_hcprime(1, 1, 1, y=1).evaluate(0, 0) == Fraction(1, 2)
    assert unigen_series(G_XI, 1, 1, y=1)[1].evaluate(0, 0) == Fraction(1, 2)


def test_stirling_closed_form_recovered():
    # h_1 = g_eta at (y, w) = (1, 0) gives the classical B_m^(u) for positive u as well
    for u in range(1, 4):
        for m in range(6):
            assert closed_form_hd(m, u, 1, y=1).evaluate(0, 0) == poly_bernoulli_B(m, u)


@pytest.mark.parametrize("g", [Matrix2(1, -1, 1, 1), Matrix2(I, -I, 1, 1), Matrix2(-2, 2, 1, 1)], ids=str)
def test_general_branch(g):
    for l in range(5):
        for m in range(5):
            assert xi2k_exact(g, m + 1, -l, m) == gl2_bernoulli(g, m, l)


def test_general_branch_requires_admissible():
    with pytest.raises(DomainError):
        xi2k_exact(Matrix2(2, -2, 1, 3), 2, 0, 1)


def test_positive_u_closed_forms_agree():
    for u in (1, 2, 3):
        for y in (1, Fraction(1, 2), I):
            for m in range(5):
                ref = unigen_series(h_d(3), u, m, y=y)[m]
                assert closed_form_hd(m, u, 3, y=y) == ref
                assert xi2k_exact(h_d(3), m + 1, u, m, y=y) == ref


def test_inversion():
    for l in range(9):
        for m in range(9):
            assert gl2_bernoulli(G_XI, m, l) == transform_invert(gl2_bernoulli(G_ETA, m, l), m)


@pytest.mark.parametrize("alpha", [2, -1, I])
def test_scaling(alpha):
    for g in (G_ETA, G_XI):
        scaled = g.scaled(alpha)
        for l in range(6):
            for m in range(6):
                assert gl2_bernoulli(scaled, m, l) == transform_scale(gl2_bernoulli(g, m, l), alpha)
    assert gl2_bernoulli(G_ETA.scaled(-1), 3, 2) == -gl2_bernoulli(G_ETA, 3, 2)


@given(exact_matrices(), st.integers(0, 3), st.integers(0, 3))
def test_difference_relation_random(g, l, m):
    a, b, c, d = g.entries()
    P = gl2_bernoulli(g, m, l)
    total = (P.shift(1, -1).scale(a) + P.shift(1, 0).scale(b) - P.shift(0, -1).scale(c)
             - P.scale(d) + Y ** l * W ** m)
    assert not total


@given(exact_matrices(), st.integers(0, 3), st.integers(0, 3))
def test_duality_seed_random(g, k, m):
    lhs = gl2_bernoulli(g, k, m).shift(0, -1)
    rhs = gl2_bernoulli(g.inverse(), m, k).swap().shift(-1, 0).scale(-g.det().inverse())
    assert lhs == rhs


def test_phi_p_representation():
    # Phi(z, 0, y) = 1/(1-z) and Phi(z, -1, y) = y/(1-z) + z/(1-z)^2
    assert phi_p_coefficients(0) == (PolyYW.const(1),)
    p1, p2 = phi_p_coefficients(1)
    assert p1 == Y - 1 and p2 == PolyYW.const(1)
