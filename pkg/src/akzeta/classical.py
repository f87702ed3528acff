"""Classical poly-Bernoulli numbers B_n^(k), C_n^(k), Stirling numbers and Bernoulli polynomials."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exact import PolyYW, TruncSeries1, _norm, exp_series, series_div

Rational = int | Fraction


@lru_cache(maxsize=None)
def stirling1(n: int, m: int) -> int:
    """Unsigned Stirling number of the first kind: coefficient of X^m in X(X+1)...(X+n-1)."""
    if n < 0 or m < 0:
        raise ValueError("Stirling indices must be non-negative")
    if n == 0:
        return 1 if m == 0 else 0
    if m == 0 or m > n:
        return 0
    return stirling1(n - 1, m - 1) + (n - 1) * stirling1(n - 1, m)


def stirling2(m: int, n: int) -> int:
    """Stirling number of the second kind via the alternating binomial sum."""
    if n < 0 or m < 0:
        raise ValueError("Stirling indices must be non-negative")
    total = sum((-1) ** j * comb(n, j) * (j ** m if (j or m) else 1) for j in range(n + 1))
    total *= (-1) ** n
    q, r = divmod(total, factorial(n))
    assert r == 0
    return q


def _one_minus_exp_neg(order: int) -> TruncSeries1:
    # 1 - e^{-t}
    e = exp_series(order, -1)
    return TruncSeries1([0] + [-c for c in e.coeffs[1:]])


@lru_cache(maxsize=None)
def _li_over_z(k: int, order: int) -> tuple:
    """Taylor coefficients in t of Li_k(z)/z with z = 1 - e^{-t}."""
    z = _one_minus_exp_neg(order)
    # Li_k(z)/z = sum_{m>=0} z^m / (m+1)^k; z has valuation one, so order+1 terms are exact
    outer = TruncSeries1([_norm(Fraction(1) / Fraction(m + 1) ** k) for m in range(order + 1)])
    return tuple(outer.compose(z).coeffs)


def poly_bernoulli_B_series(k: int, order: int) -> list[Rational]:
    """Exponential-generating-function coefficients B_0^(k) ... B_order^(k)."""
    coeffs = _li_over_z(k, order)
    return [_norm(c * factorial(n)) for n, c in enumerate(coeffs)]


def poly_bernoulli_B(n: int, k: int) -> Rational:
    """B_n^(k) from Li_k(1 - e^{-t}) / (1 - e^{-t})."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return poly_bernoulli_B_series(k, n)[n]


@lru_cache(maxsize=None)
def _c_coeffs(k: int, order: int) -> tuple:
    # Li_k(z) / (e^t - 1): divide numerator and denominator by t first
    z = _one_minus_exp_neg(order + 1)
    li = TruncSeries1([0] + [_norm(Fraction(1) / Fraction(m) ** k) for m in range(1, order + 2)])
    num = li.compose(z)
    den = exp_series(order + 1) - 1
    q = series_div(TruncSeries1(num.coeffs[1:]), TruncSeries1(den.coeffs[1:]))
    return tuple(q.coeffs)


def poly_bernoulli_C(n: int, k: int) -> Rational:
    """C_n^(k) from Li_k(1 - e^{-t}) / (e^t - 1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _norm(_c_coeffs(k, n)[n] * factorial(n))


def poly_bernoulli_B_closed(m: int, u: int) -> Rational:
    """B_m^(u) from the Stirling-number closed form."""
    total = sum(
        Fraction((-1) ** n * factorial(n) * stirling2(m, n)) / Fraction(n + 1) ** u for n in range(m + 1)
    )
    return _norm((-1) ** m * total)


def poly_bernoulli_poly(m: int, u: int) -> PolyYW:
    """B_m^(u)(w) from e^{-wt} Li_u(1-e^{-t})/(1-e^{-t}), returned as a polynomial in w."""
    b = poly_bernoulli_B_series(u, m)
    terms = {}
    for i in range(m + 1):
        terms[(0, m - i)] = comb(m, i) * (-1) ** (m - i) * b[i]
    return PolyYW(terms)


@lru_cache(maxsize=None)
def bernoulli_numbers(n: int) -> tuple:
    """B_0..B_n with B_1 = -1/2, from the recurrence sum_{k<=m} C(m+1,k) B_k = 0."""
    out = [Fraction(1)]
    for m in range(1, n + 1):
        out.append(-sum(comb(m + 1, k) * out[k] for k in range(m)) / (m + 1))
    return tuple(_norm(x) for x in out)


def bernoulli_poly(m: int) -> PolyYW:
    """Classical Bernoulli polynomial B_m(w) = sum C(m,k) B_k w^{m-k}."""
    b = bernoulli_numbers(m)
    return PolyYW({(0, m - k): comb(m, k) * b[k] for k in range(m + 1)})
