"""Poly-Bernoulli polynomials attached to a matrix g in GL2(C).

The central object is the grid of values B_m^(-l)(y, w; g), read off from the
two-variable generating function

    e^{wt} e^{yx} / ((c e^{-t} + d) - (a e^{-t} + b) e^x).

Every value is a polynomial in (y, w) with Gaussian-rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Optional

from .exact import (
    GaussianRational,
    NonUnitError,
    PolyYW,
    TruncSeries1,
    TruncSeries2,
    exp_series,
    gr,
    series_div,
    series_mul,
)
from .moebius import FLIP, ONE, INF, Matrix2, act, check_def_cond

_Y = PolyYW.y()
_W = PolyYW.w()


class DomainError(ValueError):
    """The requested object is not defined for this matrix or these parameters."""


def _require_exact(g: Matrix2):
    if not g.exact:
        raise TypeError("exact computations need a matrix with Gaussian-rational entries")


def _signed_exp(order: int, sign: int) -> list:
    return exp_series(order, sign).coeffs


# ---------------------------------------------------------------------------
# two-variable generating function


@lru_cache(maxsize=256)
def _inverse_denominator(g: Matrix2, order_t: int, order_x: int) -> tuple:
    a, b, c, d = g.entries()
    em = _signed_exp(order_t, -1)  # e^{-t}
    ex = _signed_exp(order_x, 1)   # e^{x}
    den = [[0] * (order_x + 1) for _ in range(order_t + 1)]
    for i in range(order_t + 1):
        jd = c * em[i] + (d if i == 0 else 0)
        jn = a * em[i] + (b if i == 0 else 0)
        for j in range(order_x + 1):
            den[i][j] = (jd if j == 0 else 0) - jn * ex[j]
    one = [[1 if (i, j) == (0, 0) else 0 for j in range(order_x + 1)] for i in range(order_t + 1)]
    try:
        inv = TruncSeries2(one, order_t, order_x) / TruncSeries2(den, order_t, order_x)
    except NonUnitError:
        raise DomainError(f"g(1) = 1 for {g}; the generating function has no Taylor expansion") from None
    return tuple(tuple(gr(c) for c in row) for row in inv.coeffs)


@lru_cache(maxsize=256)
def _bigen_grid(g: Matrix2, order_m: int, order_l: int) -> tuple:
    inv = _inverse_denominator(g, order_m, order_l)
    fact = [factorial(n) for n in range(max(order_m, order_l) + 1)]
    grid = []
    for m in range(order_m + 1):
        row = []
        for l in range(order_l + 1):
            terms = {}
            scale = fact[m] * fact[l]
            for i in range(m + 1):       # power of w
                for j in range(l + 1):   # power of y
                    c = inv[m - i][l - j]
                    if c:
                        terms[(j, i)] = c * Fraction(scale, fact[i] * fact[j])
            row.append(PolyYW(terms))
        grid.append(tuple(row))
    return tuple(grid)


def bigen_series(g: Matrix2, order_m: int, order_l: Optional[int] = None, strict: bool = False):
    """Grid ``G[m][l] = B_m^(-l)(y, w; g)`` for m <= order_m, l <= order_l.

    The coefficients are rational functions of the entries of g, so they are
    computed for every g with g(1) != 1.  With ``strict=True`` the matrix must
    also pass the admissibility test.
    """
    _require_exact(g)
    if order_l is None:
        order_l = order_m
    if strict:
        adm = check_def_cond(g)
        if not adm:
            raise DomainError(f"{g} is not admissible (witness T = {adm.witness})")
    return _bigen_grid(g, order_m, order_l)


def gl2_bernoulli(g: Matrix2, m: int, l: int) -> PolyYW:
    """B_m^(-l)(y, w; g) as a polynomial in (y, w)."""
    return bigen_series(g, m, l)[m][l]


# ---------------------------------------------------------------------------
# one-variable generating function


@lru_cache(maxsize=None)
def phi_p_coefficients(l: int) -> tuple:
    """Phi(z, -l, y) = sum_k P_k(y) p^k with p = 1/(1-z); returns (P_1, ..., P_{l+1})."""
    # the Euler operator acts by theta p^k = k (p^{k+1} - p^k)
    coeffs = {1: PolyYW.const(1)}
    for _ in range(l):
        nxt: dict = {}
        for k, P in coeffs.items():
            nxt[k] = nxt.get(k, PolyYW()) + P * _Y - P * k
            nxt[k + 1] = nxt.get(k + 1, PolyYW()) + P * k
        coeffs = nxt
    return tuple(coeffs.get(k, PolyYW()) for k in range(1, l + 2))


def _y_power(n: int, u: int, y) -> PolyYW:
    """(y + n)^(-u): a polynomial in y when u <= 0, otherwise needs a concrete y."""
    if u <= 0:
        base = _Y + n if y is None else PolyYW.const(gr(y) + n)
        return base ** (-u)
    if y is None:
        raise DomainError("positive index u needs a concrete value of y")
    v = gr(y) + n
    if not v:
        raise DomainError(f"y + {n} = 0 makes (y+n)^(-u) undefined")
    return PolyYW.const(v ** (-u))


def phi_z_series(u: int, order: int, y=None) -> TruncSeries1:
    """Phi(z, u, y) = sum_n z^n / (n + y)^u truncated at z^order."""
    return TruncSeries1([_y_power(n, u, y) for n in range(order + 1)], var="z")


def _moebius_series(g: Matrix2, order: int):
    """Series in t of j_N(g, e^{-t}) and j_D(g, e^{-t})."""
    a, b, c, d = g.entries()
    em = _signed_exp(order, -1)
    jn = TruncSeries1([a * em[i] + (b if i == 0 else 0) for i in range(order + 1)])
    jd = TruncSeries1([c * em[i] + (d if i == 0 else 0) for i in range(order + 1)])
    return jn, jd


def unigen_series(g: Matrix2, u: int, order: int, y=None) -> list[PolyYW]:
    """[B_0^(u), ..., B_order^(u)] from e^{wt} Phi(g e^{-t}, u, y) / j_D(g, e^{-t})."""
    _require_exact(g)
    g1 = act(g, ONE)
    if g1 == ONE or g1 == INF:
        raise DomainError("the one-variable generating function needs g(1) outside {1, inf}")
    jn, jd = _moebius_series(g, order)
    z = series_div(jn, jd)
    if u >= 1 and z.coeffs[0]:
        raise DomainError("positive index u is only supported when g(1) = 0")
    if not z.coeffs[0]:
        phi = phi_z_series(u, order, y).compose(z)
    else:
        # Phi(z, -l, y) is a polynomial in p = 1/(1-z)
        p = series_div(jd, jd - jn)
        coeffs = phi_p_coefficients(-u)
        if y is not None:
            coeffs = tuple(P.substitute(PolyYW.const(y), _W) for P in coeffs)
        phi = TruncSeries1([0] * (order + 1))
        power = p
        for P in coeffs:
            phi = phi + power * P
            power = series_mul(power, p)
    ew = TruncSeries1([_W ** n * Fraction(1, factorial(n)) for n in range(order + 1)])
    inv_jd = series_div(TruncSeries1([1] + [0] * order), jd)
    total = series_mul(series_mul(ew, phi), inv_jd)
    return [PolyYW.coerce(c) * factorial(n) for n, c in enumerate(total.coeffs)]


# ---------------------------------------------------------------------------
# closed forms for the two families with g(1) = 0


def closed_form_hd(m: int, u: int, d, y=None) -> PolyYW:
    """B_m^(u)(y, w; h_d) for h_d = (-1 1; 0 d)."""
    d = gr(d)
    out = PolyYW()
    for n in range(m + 1):
        inner = PolyYW()
        for j in range(n + 1):
            inner = inner + (_W - j) ** m * (comb(n, j) * (-1) ** j)
        out = out + _y_power(n, u, y) * inner * d ** (-(n + 1))
    return out


def closed_form_hcprime(m: int, u: int, c, y=None) -> PolyYW:
    """B_m^(u)(y, w; h'_c) for h'_c = (1 -1; c 0)."""
    c = gr(c)
    out = PolyYW()
    for n in range(m + 1):
        inner = PolyYW()
        for j in range(n + 1):
            inner = inner + (_W + (n + 1 - j)) ** m * (comb(n, j) * (-1) ** (n - j))
        out = out + _y_power(n, u, y) * inner * c ** (-(n + 1))
    return out


# ---------------------------------------------------------------------------
# the finite part xi_{2,k} at s = -m


def _apply_jn_shift(g: Matrix2, n: int, F: PolyYW) -> PolyYW:
    """(a D^{-1} + b)^n applied to F(w), with D^{-1} F(w) = F(w - 1)."""
    a, b = g.a, g.b
    out = PolyYW()
    for i in range(n + 1):
        coef = comb(n, i) * a ** i * b ** (n - i)
        if coef:
            out = out + F.shift(0, -i).scale(coef)
    return out


def _phi_negative(z0: GaussianRational, N: int) -> PolyYW:
    """Phi(z0, -N, w) as a polynomial in w (z0 fixed, z0 != 1)."""
    p0 = (1 - z0).inverse()
    out = PolyYW()
    power = p0
    for P in phi_p_coefficients(N):
        out = out + P.swap().scale(power)
        power = power * p0
    return out


def xi2k_exact(g: Matrix2, k: int, u: int, m: int, y=None) -> PolyYW:
    """xi_{2,k}(u, -m; y, w; g) as a polynomial in w (and in y when u <= 0)."""
    _require_exact(g)
    a, b, c, d = g.entries()
    out = PolyYW()
    if not c or not d:
        for n in range(k):
            if not c:
                F = _W ** m * d ** (-(n + 1))
            else:
                F = (_W + (n + 1)) ** m * c ** (-(n + 1))
            out = out + _y_power(n, u, y) * _apply_jn_shift(g, n, F)
        return out
    adm = check_def_cond(g)
    if not adm:
        raise DomainError(f"{g} is not admissible (witness T = {adm.witness})")
    z0 = -d / c
    if not z0.im and z0.re >= 1:
        raise DomainError(f"-d/c = {z0} lies on the cut [1, inf)")
    for n in range(k):
        # prod_{j=1}^n (X + j - w) expanded in X = D_s^{-1}
        poly_in_x = [PolyYW.const(1)]
        for j in range(1, n + 1):
            shift = _W * (-1) + j
            nxt = [PolyYW() for _ in range(len(poly_in_x) + 1)]
            for r, e in enumerate(poly_in_x):
                nxt[r + 1] = nxt[r + 1] + e
                nxt[r] = nxt[r] + e * shift
            poly_in_x = nxt
        G = PolyYW()
        for r, e in enumerate(poly_in_x):
            G = G + e * _phi_negative(z0, m + r)
        F = G.shift(0, n + 1).scale(c ** (-(n + 1)) * Fraction(1, factorial(n)))
        out = out + _y_power(n, u, y) * _apply_jn_shift(g, n, F)
    return out


# ---------------------------------------------------------------------------
# transformation rules


def transform_scale(value: PolyYW, alpha) -> PolyYW:
    """B(y, w; alpha g) = B(y, w; g) / alpha."""
    return value.scale(gr(alpha).inverse())


def transform_invert(value: PolyYW, m: int) -> PolyYW:
    """B_m(y, w; h (0 1; 1 0)) = (-1)^m B_m(y, -w-1; h)."""
    return value.substitute(_Y, -_W - 1).scale((-1) ** m)


def flip(g: Matrix2) -> Matrix2:
    return g @ FLIP


# ---------------------------------------------------------------------------
# convenience


def gl2_value(g: Matrix2, u: int, m: int, y=None, w=None):
    """B_m^(u)(y, w; g): exact number if y and w are given, else a polynomial."""
    if u <= 0:
        P = gl2_bernoulli(g, m, -u)
    else:
        if y is None:
            raise DomainError("positive index u needs a concrete y")
        P = unigen_series(g, u, m, y=y)[m]
    if y is not None:
        P = P.substitute(PolyYW.const(y), _W)
    if w is not None:
        P = P.substitute(_Y, PolyYW.const(w))
    if P.is_constant() and y is not None and w is not None:
        return P.constant_term()
    return P
