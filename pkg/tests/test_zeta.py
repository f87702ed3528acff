import mpmath
import pytest

from akzeta.gl2 import gl2_value
from akzeta.moebius import G_ETA, G_XI, Matrix2, g_alpha
from akzeta.numeric import (
    QuadratureConfig,
    ZetaDomainError,
    riemann_zeta_real,
    xi_D_at_neg_int,
    xi_D_hankel,
    xi_D_numeric,
    xi_N_numeric,
    xi_relation_check,
)


def direct_sum_xi1(s, terms=200000):
    # xi(1; s) = s zeta(s + 1), summed with an integral tail correction
    n = terms
    tail = n ** -s / s - 0.5 * n ** (-s - 1)
    return s * (sum(k ** (-s - 1) for k in range(1, n)) + tail)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_xi_one_gives_riemann_zeta(s):
    v = xi_D_numeric(1, s, 1, 0, G_XI)
    ref = s * float(mpmath.zeta(s + 1))
    assert abs(v.value - ref) < 1e-10
    assert abs(v.value - direct_sum_xi1(s)) < 1e-8


def test_two_zeta_three():
    v = xi_D_numeric(1, 2, 1, 0, G_XI)
    assert abs(v.value - 2 * riemann_zeta_real(3)) < 1e-12


@pytest.mark.parametrize("s", [2.0, 3.0, 0.5, -0.5, -2.5])
def test_riemann_zeta_reference(s):
    assert abs(riemann_zeta_real(s) - float(mpmath.zeta(s))) < 1e-12


def test_eta_symmetry():
    a = xi_D_numeric(1.5, 2.5, 1, 0, G_ETA)
    b = xi_D_numeric(2.5, 1.5, 1, 0, G_ETA)
    assert abs(a.value - b.value) < 1e-10


def test_xi_N_is_shifted_xi_D():
    assert xi_N_numeric(1.5, 2.0, 0.5, 0, G_XI).value == xi_D_numeric(1.5, 2.0, 1.5, 0, G_XI).value


@pytest.mark.parametrize(
    "kind, g, point",
    [
        ("difference", G_XI, (2, 1.5, 1.3, 0.8)),
        ("difference", G_ETA, (2, 1.5, 1.3, 0.8)),
        ("duality0", G_ETA, (1.5, 2.5, 1.2, 1.1)),
        ("duality0", G_XI, (2, 2, 1.5, 1.5)),
    ],
)
def test_relations_at_fixed_points(kind, g, point):
    res = xi_relation_check(kind, g, *point)
    assert res.passed
    assert res.residual < 1e-10


def test_unknown_relation():
    with pytest.raises(ValueError):
        xi_relation_check("triality", G_ETA, 2, 2, 1, 1)


@pytest.mark.parametrize("g", [G_ETA, G_XI], ids=str)
def test_hankel_matches_integral(g):
    h = xi_D_hankel(1, 2.5, 1, 0, g)
    d = xi_D_numeric(1, 2.5, 1, 0, g)
    assert abs(h.value - d.value) < 1e-7


def test_hankel_radius_independence():
    a = xi_D_hankel(2, -0.5, 1, 0, G_ETA)
    b = xi_D_hankel(2, -0.5, 1, 0, G_ETA, eps=a.info["radius"] / 2)
    assert abs(a.value - b.value) < 1e-10


@pytest.mark.parametrize("g", [G_ETA, G_XI], ids=str)
def test_difference_relation_continued(g):
    u, s, y, w = 2.0, -1.5, 1.3, 0.8
    a, b, c, d = (complex(x) for x in g.entries())
    total, err = y ** -u * w ** -s, 0.0
    for coef, yy, ww in ((a, y + 1, w - 1), (b, y + 1, w), (-c, y, w - 1), (-d, y, w)):
        if coef:
            ev = xi_D_hankel(u, s, yy, ww, g, check=False)
            total += coef * ev.value
            err += abs(coef) * ev.est_error
    assert abs(total) <= 10 * err + 1e-12


def test_hankel_rejects_integer_s():
    with pytest.raises(ZetaDomainError):
        xi_D_hankel(1, -2, 1, 0, G_ETA)


@pytest.mark.parametrize(
    "g, u, m, expected",
    [
        (g_alpha(3), -3, 2, 242),
        (G_ETA, -2, 3, complex(gl2_value(G_ETA, -2, 3, 1, 0))),
        (G_XI, 1, 0, 1),
    ],
    ids=["reflection", "eta", "xi-m0"],
)
def test_circle_against_exact(g, u, m, expected):
    ev = xi_D_at_neg_int(u, m, 1, 0, g)
    assert abs(ev.value - expected) <= 1e-9 * max(1, abs(expected))


def test_refinement_is_stable():
    cfg = QuadratureConfig()
    a = xi_D_numeric(1.5, 2.0, 1.2, 0.3, G_XI, cfg)
    b = xi_D_numeric(1.5, 2.0, 1.2, 0.3, G_XI, cfg.tightened())
    assert abs(a.value - b.value) <= 10 * (a.est_error + b.est_error) + 1e-14


def test_domain_errors():
    with pytest.raises(ZetaDomainError):
        xi_D_numeric(1, 2, 1, 0, g_alpha(3))  # not admissible
    with pytest.raises(ZetaDomainError):
        xi_D_numeric(1, -0.5, 1, 0, G_XI)  # Re s <= 0 needs the Hankel contour
    with pytest.raises(ZetaDomainError):
        xi_D_at_neg_int(1, 2, 1, 0, Matrix2(1, 0, 0, 1))
    with pytest.raises(ValueError):
        xi_D_at_neg_int(1, -1, 1, 0, G_ETA)
