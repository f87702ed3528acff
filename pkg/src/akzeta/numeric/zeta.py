"""Numerical evaluation of the zeta integral attached to a matrix g.

    xi_D(u, s; y, w; g) = 1/Gamma(s) int_0^inf t^{s-1} e^{-wt} Phi(g e^t, u, y) / j_D(g, e^t) dt

together with its Hankel-contour continuation in s and the residue formula at
s = -m, which connects the integral to the exact poly-Bernoulli grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import factorial

import numpy as np
from scipy.special import rgamma

from ..moebius import ONE, INF, Matrix2, act, check_def_cond, domain_report
from .lerch import EPS, LerchDomainError, is_nonpositive_integer, lerch_phi_batch
from .quadrature import (
    ComplexEval,
    QuadratureConfig,
    converged,
    exp_map,
    gauss_legendre,
    level_taus,
    tanh_sinh,
)

DEFAULT_CONFIG = QuadratureConfig()
TAU_MAX = 6.55  # exp(6.55) ~ 700, the largest t for which e^t is still finite
LOG_T_MIN = -600.0


class ZetaDomainError(ValueError):
    """Parameters outside the certified domain of the requested representation."""


def _entries(g: Matrix2):
    return tuple(complex(x) for x in g.entries())


def _integrand_factory(g: Matrix2, u, y, w, cfg: QuadratureConfig):
    """F(t) = e^{-wt} Phi(g e^t, u, y) / j_D(g, e^t) on an array of (complex) t."""
    a, b, c, d = _entries(g)
    u, y, w = complex(u), complex(y), complex(w)

    def F(t: np.ndarray):
        em1 = np.expm1(t)
        jn = a * em1 + (a + b)
        jd = c * em1 + (c + d)
        omz = ((c - a) * em1 + ((c + d) - (a + b))) / jd
        z = jn / jd
        phi, perr = lerch_phi_batch(z, u, y, one_minus_z=omz, cfg=cfg)
        scale = np.exp(-w * t) / jd
        return phi * scale, perr * np.abs(scale)

    return F


def _mellin_ray(F, s: complex, lower: float, cfg: QuadratureConfig):
    """int_lower^inf t^{s-1} F(t) dt; lower = 0 allows the t^{s-1} endpoint singularity."""
    sm1 = s - 1.0
    span = 1.0 - lower

    def first(tau):
        xr, log_xr, _, log_dxr = tanh_sinh(tau)
        if lower == 0.0:
            # nodes closer than e^-600 to the origin are dropped; their share is bounded below
            tau = tau[log_xr > LOG_T_MIN]
            xr, log_xr, _, log_dxr = tanh_sinh(tau)
            t, logt = xr, log_xr
        else:
            t = lower + span * xr
            logt = np.log(t)
        logw = log_dxr + math.log(span)
        f, fe = F(t)
        pw = np.exp(sm1 * logt + logw)
        return f * pw, fe * np.abs(pw)

    def second(tau):
        xe, _, log_dx = exp_map(tau)
        t = 1.0 + xe
        pw = np.exp(sm1 * np.log(t) + log_dx)
        f, fe = F(t)
        return f * pw, fe * np.abs(pw)

    lo1, hi1 = -6.5, 3.5
    lo2 = -4.5
    # choose the upper cut-off of the tail from a coarse pass
    coarse = level_taus(lo2, TAU_MAX, cfg.h0, 0)
    with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
        f2, _ = second(coarse)
        f1, _ = first(level_taus(lo1, hi1, cfg.h0, 0))
    mags = np.abs(f2)
    top = max(np.nanmax(np.abs(f1)), np.nanmax(mags))
    keep = np.flatnonzero(mags > 1e-18 * top)
    hi2 = min(TAU_MAX, coarse[keep[-1]] + 2 * cfg.h0) if len(keep) else lo2 + 4 * cfg.h0
    truncation = float(mags[-1]) if hi2 >= TAU_MAX else 0.0
    if lower == 0.0:
        t0 = np.array([math.exp(LOG_T_MIN)])
        with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
            f0, _ = F(t0)
        if s.real <= 0 or not np.isfinite(f0[0]):
            raise ZetaDomainError("the integrand is not integrable at t = 0")
        truncation += abs(f0[0]) * math.exp(s.real * LOG_T_MIN) / s.real

    total = 0j
    mag = 0.0
    inner = 0.0
    prev = None
    est = math.inf
    h = cfg.h0
    with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
        for level in range(cfg.max_level + 1):
            h = cfg.h0 / 2 ** level
            v1, e1 = first(level_taus(lo1, hi1, cfg.h0, level))
            v2, e2 = second(level_taus(lo2, hi2, cfg.h0, level))
            total += v1.sum() + v2.sum()
            mag += np.abs(v1).sum() + np.abs(v2).sum()
            inner += e1.sum() + e2.sum()
            cur = h * total
            if prev is not None:
                est = abs(cur - prev)
                if level >= 2 and converged(np.array(prev), np.array(cur), cfg):
                    break
            prev = cur
    if not np.isfinite(cur):
        raise ZetaDomainError("the zeta integrand is not finite along the ray; parameters are outside the domain")
    return cur, est + h * inner + 16 * EPS * h * mag + truncation


def _check_domain(g: Matrix2, u, s, y, w, what: str):
    if not check_def_cond(g):
        raise ZetaDomainError(f"{g} does not satisfy the admissibility condition; {what} is not certified")
    rep = domain_report(g)
    if not rep.contains(u, s, y, w):
        raise ZetaDomainError(
            f"(u, s, y, w) = ({u}, {s}, {y}, {w}) lies outside the convergence domain {rep.half_planes()} "
            f"for every admissible split {rep.constraints}"
        )


def xi_D_numeric(u, s, y, w, g: Matrix2, cfg: QuadratureConfig | None = None, check: bool = True) -> ComplexEval:
    """The zeta integral by nested double-exponential quadrature."""
    cfg = cfg or DEFAULT_CONFIG
    if check:
        _check_domain(g, u, s, y, w, "the zeta integral")
    F = _integrand_factory(g, u, y, w, cfg)
    try:
        val, err = _mellin_ray(F, complex(s), 0.0, cfg)
    except LerchDomainError as exc:
        raise ZetaDomainError(str(exc)) from None
    rg = complex(rgamma(complex(s)))
    return ComplexEval(rg * val, abs(rg) * err, "integral")


def xi_N_numeric(u, s, y, w, g: Matrix2, cfg: QuadratureConfig | None = None, check: bool = True) -> ComplexEval:
    """xi_N(u, s; y, w; g) = xi_D(u, s; y + 1, w; g)."""
    return xi_D_numeric(u, s, complex(y) + 1, w, g, cfg, check)


# ---------------------------------------------------------------------------
# contour methods


def singular_radius(g: Matrix2, u) -> float:
    """Distance from t = 0 to the nearest singularity of e^{-wt} Phi(g e^t, u, y) / j_D(g, e^t)."""
    gi = g.inverse()
    a, b, c, d = _entries(gi)
    if is_nonpositive_integer(u):
        # only the pole g e^t = 1 survives
        den = c + d
        if den == 0:
            return math.inf
        T = (a + b) / den
        return abs(np.log(complex(T))) if T != 0 else math.inf
    r = np.concatenate([np.linspace(0.0, 1.0, 4001), np.geomspace(1e-8, 1e-3, 200)])
    num = a + b * r  # g^{-1}(1/r) in projective coordinates
    den = c + d * r
    with np.errstate(divide="ignore", invalid="ignore"):
        T = num / den
        ok = np.isfinite(T) & (np.abs(T) > 0)
        dist = np.abs(np.log(T[ok].astype(complex)))
    return float(dist.min()) if dist.size else math.inf


def _contour_radius(g: Matrix2, u, eps):
    if eps is not None:
        return float(eps)
    R = singular_radius(g, u)
    if R == 0:
        raise ZetaDomainError("g(1) lies on the branch cut of Phi; no contour around t = 0 exists")
    return min(0.25 * R, 1.0)


def _require_finite_g1(g: Matrix2):
    g1 = act(g, ONE)
    if g1 == ONE:
        raise ZetaDomainError("g(1) = 1: the integrand has a pole at t = 0")
    if g1 == INF:
        raise ZetaDomainError("g(1) = inf: the integrand is not holomorphic at t = 0")


def xi_D_hankel(u, s, y, w, g: Matrix2, cfg: QuadratureConfig | None = None, eps=None,
                check: bool = True) -> ComplexEval:
    """Continuation in s through the Hankel contour (needs g(1) outside {1, inf}, s not an integer)."""
    cfg = cfg or DEFAULT_CONFIG
    s = complex(s)
    if s.imag == 0 and float(s.real).is_integer():
        raise ZetaDomainError("the Hankel prefactor is singular at integer s; use xi_D_at_neg_int")
    _require_finite_g1(g)
    if check:
        _check_domain(g, u, max(s.real, 0.0) + 10.0, y, w, "the Hankel representation")
    radius = _contour_radius(g, u, eps)
    F = _integrand_factory(g, u, y, w, cfg)
    try:
        ray, ray_err = _mellin_ray(F, s, radius, cfg)
        # circle t = radius e^{i theta}, theta from 0 to 2 pi; single-valued integrand check
        f0, _ = F(np.array([radius + 0j]))
        f1, _ = F(np.array([radius * np.exp(2j * np.pi)]))
        if abs(f1[0] - f0[0]) > 1e-8 * max(abs(f0[0]), 1e-300):
            raise ZetaDomainError("integrand is not single-valued on the contour circle")
        prev = None
        n = 32
        while True:
            theta, wts = gauss_legendre(0.0, 2 * np.pi, n)
            t = radius * np.exp(1j * theta)
            f, fe = F(t)
            pw = 1j * np.exp(s * np.log(radius) + 1j * theta * s)
            circ = np.sum(wts * pw * f)
            circ_err = np.sum(wts * np.abs(pw) * fe)
            if prev is not None and (abs(circ - prev) <= max(cfg.abs_tol, cfg.rel_tol * abs(circ)) or n >= 512):
                circ_est = abs(circ - prev) + circ_err
                break
            prev = circ
            n *= 2
    except LerchDomainError as exc:
        raise ZetaDomainError(str(exc)) from None
    phase = np.exp(2j * np.pi * s) - 1.0
    rg = complex(rgamma(s))
    value = rg * (ray + circ / phase)
    err = abs(rg) * (ray_err + circ_est / abs(phase))
    return ComplexEval(value, err, "hankel", {"radius": radius})


def xi_D_at_neg_int(u, m: int, y, w, g: Matrix2, cfg: QuadratureConfig | None = None, eps=None) -> ComplexEval:
    """xi_D(u, -m; y, w; g) = (-1)^m m! [t^m] e^{-wt} Phi(g e^t, u, y) / j_D(g, e^t), by the trapezoidal rule on a circle."""
    cfg = cfg or DEFAULT_CONFIG
    if m < 0:
        raise ValueError("m must be a non-negative integer")
    if act(g, ONE) == ONE:
        raise ZetaDomainError("g(1) = 1: the generating function has a pole at t = 0")
    radius = _contour_radius(g, u, eps)
    F = _integrand_factory(g, u, y, w, cfg)
    n = max(cfg.circle_nodes, 2 * (m + 1))
    prev = None
    try:
        while True:
            k = np.arange(n)
            t = radius * np.exp(2j * np.pi * k / n)
            f, fe = F(t)
            coef = np.mean(f * t ** (-m))
            val = (-1) ** m * factorial(m) * coef
            floor = factorial(m) * radius ** (-m) * (np.mean(fe) + 8 * EPS * np.max(np.abs(f)))
            if prev is not None and (abs(val - prev) <= max(cfg.abs_tol, cfg.rel_tol * abs(val)) or n >= cfg.max_circle_nodes):
                return ComplexEval(complex(val), float(abs(val - prev) + floor), "circle",
                                   {"radius": radius, "nodes": n})
            prev = val
            n *= 2
    except LerchDomainError as exc:
        raise ZetaDomainError(str(exc)) from None


# ---------------------------------------------------------------------------
# relation residuals


@dataclass
class RelationCheck:
    kind: str
    residual: float
    est_error: float
    factor: float = 10.0

    @property
    def passed(self) -> bool:
        return self.residual <= self.factor * self.est_error

    def to_dict(self) -> dict:
        return {"kind": self.kind, "residual": self.residual, "est_error": self.est_error, "passed": self.passed}


def xi_relation_check(kind: str, g: Matrix2, u, s, y, w, cfg: QuadratureConfig | None = None) -> RelationCheck:
    """Residual of the difference relation ("difference") or the n = 0 duality ("duality0")."""
    cfg = cfg or DEFAULT_CONFIG
    u, s, y, w = (complex(v) for v in (u, s, y, w))
    terms = []
    if kind == "difference":
        a, b, c, d = _entries(g)
        for coef, yy, ww in ((a, y + 1, w - 1), (b, y + 1, w), (-c, y, w - 1), (-d, y, w)):
            if coef != 0:
                terms.append((coef, xi_D_numeric(u, s, yy, ww, g, cfg)))
        extra = np.exp(-u * np.log(y) - s * np.log(w))
        total = sum(cf * ev.value for cf, ev in terms) + extra
        err = sum(abs(cf) * ev.est_error for cf, ev in terms) + 8 * EPS * abs(extra)
    elif kind == "duality0":
        det = complex(g.det())
        lhs = xi_D_numeric(u, s, y, w - 1, g, cfg)
        rhs = xi_D_numeric(s, u, w, y - 1, g.inverse(), cfg)
        total = lhs.value + rhs.value / det
        err = lhs.est_error + rhs.est_error / abs(det)
    else:
        raise ValueError(f"unknown relation kind {kind!r}")
    return RelationCheck(kind, float(abs(total)), float(err))


# ---------------------------------------------------------------------------
# reference special functions


def riemann_zeta_real(s: float, n_direct: int = 20, n_corr: int = 12) -> float:
    """Riemann zeta at real s != 1 by Euler-Maclaurin summation."""
    from ..classical import bernoulli_numbers

    s = float(s)
    if s == 1.0:
        raise ValueError("zeta has a pole at s = 1")
    N = n_direct
    total = sum(n ** -s for n in range(1, N))
    total += N ** (1 - s) / (s - 1) + 0.5 * N ** -s
    B = bernoulli_numbers(2 * n_corr)
    rising = s  # s (s+1) ... (s + 2k - 2)
    for k in range(1, n_corr + 1):
        if k > 1:
            rising *= (s + 2 * k - 3) * (s + 2 * k - 2)
        total += float(B[2 * k]) / factorial(2 * k) * rising * N ** (-s - 2 * k + 1)
    return total
