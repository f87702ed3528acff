import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from akzeta.exact import GaussianRational, I, gr
from akzeta.moebius import (
    G_ETA,
    G_XI,
    INF,
    ONE,
    ZERO,
    Matrix2,
    RiemannPoint,
    act,
    automorphy,
    check_def_cond,
    classify,
    domain_report,
    g_alpha,
    is_cusp,
    localize,
    vertex_set,
)

from conftest import exact_matrices, small_gaussians

G_XI_INV = Matrix2(0, 1, -1, 1)


def test_parse_and_inverse():
    g = Matrix2.parse("1,-1;1,0")
    assert g == G_XI
    assert g.inverse() == G_XI_INV
    assert (g @ g.inverse()) == Matrix2(1, 0, 0, 1)
    assert Matrix2.parse("-1,i;0,1") == g_alpha(I)


def test_singular_matrix_rejected():
    with pytest.raises(ValueError):
        Matrix2(1, 2, 2, 4)


def test_action_on_special_points():
    assert act(G_ETA, ONE) == ZERO
    assert act(G_ETA, INF) == INF
    assert act(G_XI, INF) == ONE
    assert act(G_XI, ONE) == ZERO
    assert act(Matrix2(1, 0, 0, 1), GaussianRational(3, 2)) == RiemannPoint.of(GaussianRational(3, 2))


def test_automorphy_factors():
    jd, jn = automorphy(G_XI, 5)
    assert (jd, jn) == (5, 4)  # e^t and e^t - 1 at e^t = 5
    assert automorphy(G_ETA, 7)[0] == 1


@given(exact_matrices(), exact_matrices(), small_gaussians)
def test_cocycle(g, h, z):
    hz = act(h, z)
    if hz.is_infinity() or act(g @ h, z).is_infinity() or not automorphy(h, z)[0]:
        return
    lhs = automorphy(g @ h, z)[0]
    rhs = automorphy(g, hz.value())[0] * automorphy(h, z)[0]
    assert lhs == rhs


@given(exact_matrices(), small_gaussians)
def test_action_inverts(g, z):
    assert act(g, act(g.inverse(), z)) == RiemannPoint.of(z)


@pytest.mark.parametrize(
    "g, pairs",
    [
        (G_ETA, [("inf", "inf")]),
        (G_XI, [("inf", "1")]),
        (G_XI_INV, [("1", "inf")]),
        (Matrix2(-1, 1, 1, 1), []),
        (Matrix2(1, -1, 1, 1), [("inf", "1")]),
    ],
)
def test_vertex_sets(g, pairs):
    assert vertex_set(g) == pairs


@given(exact_matrices())
def test_vertex_set_by_enumeration(g):
    expected = [(t, x) for t, tp in (("1", ONE), ("inf", INF)) for x, xp in (("1", ONE), ("inf", INF))
                if act(g, tp) == xp]
    assert vertex_set(g) == expected


def test_cusp_flags():
    assert is_cusp(G_ETA, "inf", "inf") is False
    assert is_cusp(G_XI, "inf", "1") is False
    g = Matrix2(1, I, 0, 1)
    assert localize(g, "inf", "inf") == Matrix2(1, 0, I, 1)
    assert is_cusp(g, "inf", "inf") is True
    with pytest.raises(ValueError):
        is_cusp(G_ETA, "1", "1")


@given(exact_matrices(), small_gaussians)
def test_cusp_invariant_under_scaling(g, alpha):
    if not alpha:
        return
    for t, x in vertex_set(g):
        assert is_cusp(g, t, x) == is_cusp(g.scaled(alpha), t, x)


@pytest.mark.parametrize(
    "g, admissible",
    [
        (G_ETA, True),
        (G_XI, True),
        (G_XI_INV, True),
        (g_alpha(-2), True),
        (g_alpha(I), True),
        (Matrix2(1, -1, 1, 1), True),
        (Matrix2(-1, 1, 1, 1), True),
        (Matrix2(I, -I, 1, 1), True),
        (Matrix2(1, -1, I, 1), True),
        (Matrix2(-2, 2, 1, 1), True),
        (Matrix2(1, I, 0, 1), True),
        (Matrix2(1, 1, 0, 1), False),
        (g_alpha(3), False),
        (Matrix2(2, -2, 1, 3), False),
        (Matrix2(3, -3, 1, 2), False),
    ],
)
def test_admissibility_verdicts(g, admissible):
    res = check_def_cond(g)
    assert res.admissible is admissible
    assert res.certified


def test_translation_witness():
    res = check_def_cond(Matrix2(1, 1, 0, 1))
    assert not res
    T = gr(res.witness)
    assert T.im == 0 and T.re > 1
    assert act(Matrix2(1, 1, 0, 1), T) == RiemannPoint.of(T + 1)


def test_reflection_at_three_overlaps_the_ray():
    # T -> 3 - T maps [1, 3/2] into itself, so the condition fails strictly inside the ray
    res = check_def_cond(g_alpha(3))
    assert res.witness == Fraction(3, 2)
    assert gr(res.witness_image) == Fraction(3, 2)


@given(exact_matrices(), small_gaussians)
def test_admissibility_scale_invariant(g, alpha):
    if alpha:
        assert check_def_cond(g).admissible == check_def_cond(g.scaled(alpha)).admissible


def test_numeric_matrices_are_not_certified():
    res = check_def_cond(Matrix2(1.0, 1.0, 0.0, 1.0))
    assert not res.admissible and not res.certified
    assert check_def_cond(Matrix2(-1.0, 1.0, 0.0, 1.0)).admissible


def test_domain_constraints():
    eta = domain_report(G_ETA)
    assert eta.constraints == [("mu_inf", "nu_inf", 1)]
    assert eta.default_split["mu_1"] == 0 and eta.default_split["nu_1"] == 0
    xi = domain_report(G_XI)
    assert xi.constraints == [("mu_inf", "nu_1", 1)]
    assert xi.default_split["mu_1"] == 0 and xi.default_split["nu_inf"] == 0
    free = domain_report(Matrix2(-1, 1, 1, 1))
    assert free.half_planes() == {"Re u >": 0, "Re s >": 0, "Re y >": 0, "Re w >": -1}


def test_domain_membership_uses_every_split():
    eta = domain_report(G_ETA)
    # (y, w) = (1, 0) needs part of the weight on the y side
    assert eta.contains(1.5, 2.5, 1, 0)
    assert not eta.contains(1.5, 2.5, 0.5, -0.6)
    assert not eta.contains(-0.1, 2.5, 1, 1)


def test_classify_json_fields():
    info = classify(Matrix2(1, I, 0, 1))
    assert info["cusp"] == {"inf->inf": True}
    assert info["constraints"] == [{"mu": "mu_inf", "nu": "nu_inf", "sum": 2}]
    assert info["admissibility"]["admissible"] is True
    assert set(info) >= {"vertex_pairs", "default_split", "half_planes"}
