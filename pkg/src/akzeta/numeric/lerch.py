"""Vectorized Lerch transcendent Phi(z, u, y) = sum_{n>=0} z^n / (n + y)^u."""

from __future__ import annotations

import math

import numpy as np
from scipy.special import rgamma

from .quadrature import ComplexEval, QuadratureConfig, converged, exp_map, level_taus, tanh_sinh

EPS = np.finfo(float).eps
DEFAULT_CONFIG = QuadratureConfig()


class LerchDomainError(ValueError):
    """Phi is not available at these arguments by any supported representation."""


def is_nonpositive_integer(u) -> bool:
    uc = complex(u)
    return uc.imag == 0 and uc.real <= 0 and float(uc.real).is_integer()


def _closed_form(omz: np.ndarray, l: int, y: complex):
    # Phi(z, -l, y) = sum_k P_k(y) (1 - z)^{-k}; exact polynomials P_k from the exact layer
    from ..gl2 import phi_p_coefficients

    coeffs = [complex(P.evaluate(y, 0.0)) for P in phi_p_coefficients(l)]
    with np.errstate(divide="ignore", invalid="ignore"):
        p = 1.0 / omz
    acc = np.zeros_like(p)
    mag = np.zeros(p.shape)
    for c in reversed(coeffs):
        acc = (acc + c) * p
        mag = (mag + abs(c)) * np.abs(p)
    if not np.all(np.isfinite(acc)):
        raise LerchDomainError("Phi(z, -l, y) has a pole at z = 1")
    return acc, 4 * (l + 2) * EPS * mag


def _check_y(y: complex, n_terms: int):
    if y.imag == 0 and y.real <= 0 and float(y.real).is_integer() and -y.real < n_terms:
        raise LerchDomainError(f"y = {y} makes a term (n + y)^(-u) singular")


def _series(z: np.ndarray, u: complex, y: complex, cfg: QuadratureConfig, r_max: float):
    nmax = 8000
    n = np.arange(nmax, dtype=float)
    _check_y(y, nmax)
    logc = -u * np.log(n + y)
    log_bound = logc.real + n * math.log(max(r_max, 1e-300))
    peak = np.argmax(log_bound)
    cutoff = log_bound[peak] + math.log(cfg.rel_tol * 1e-3)
    tail = np.flatnonzero((log_bound < cutoff) & (n > peak))
    if len(tail) == 0:
        raise LerchDomainError(f"series for Phi converges too slowly at |z| = {r_max:.3g}")
    N = int(tail[0]) + 2
    coef = np.exp(logc[:N])
    powers = z[:, None] ** n[None, :N]
    terms = powers * coef[None, :]
    vals = terms.sum(axis=1)
    r = np.abs(z)
    tail_bound = np.abs(coef[-1]) * r ** N / np.maximum(1 - r, 1e-3)
    err = tail_bound + 8 * EPS * np.abs(terms).sum(axis=1)
    return vals, err


def _integral(z: np.ndarray, omz: np.ndarray, u: complex, y: complex, cfg: QuadratureConfig):
    """(1/Gamma(u)) int_0^inf x^{u-1} e^{-yx} / (1 - z e^{-x}) dx, split at log|z| when |z| > 1."""
    L = np.log(np.maximum(np.abs(z), 1.0))
    hasA = L > 0
    logL = np.log(np.where(hasA, L, 1.0))
    span = (60.0 + 2.0 * abs(u)) / y.real
    hiB = math.log(span)
    um1 = u - 1.0

    # 1 - z e^{-x}: the expm1 form keeps accuracy for z near 1, the direct form avoids
    # cancellation when |z| is large
    near_one = (np.abs(omz) < 0.5)[:, None]

    def denom(x):
        zc = z[:, None]
        return np.where(near_one, omz[:, None] - zc * np.expm1(-x), 1.0 - zc * np.exp(-x))

    def part_a(tau):
        xr, log_xr, _, log_dxr = tanh_sinh(tau)
        x = L[:, None] * xr[None, :]
        logx = logL[:, None] + log_xr[None, :]
        logw = logL[:, None] + log_dxr[None, :]
        f = np.exp(um1 * logx - y * x + logw) / denom(x)
        return np.where(hasA[:, None], f, 0.0)

    def part_b(tau):
        xe, log_xe, log_dx = exp_map(tau)
        x = L[:, None] + xe[None, :]
        logx = np.where(hasA[:, None], np.log(np.where(x > 0, x, 1.0)), log_xe[None, :])
        return np.exp(um1 * logx - y * x + log_dx[None, :]) / denom(x)

    sums = np.zeros(len(z), dtype=complex)
    mags = np.zeros(len(z))
    prev = None
    est = np.full(len(z), np.inf)
    with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
        for level in range(cfg.max_level + 1):
            h = cfg.h0 / 2 ** level
            fa = part_a(level_taus(-6.5, 3.5, cfg.h0, level))
            fb = part_b(level_taus(-6.0, hiB, cfg.h0, level))
            sums = sums + fa.sum(axis=1) + fb.sum(axis=1)
            mags = mags + np.abs(fa).sum(axis=1) + np.abs(fb).sum(axis=1)
            cur = h * sums
            if prev is not None:
                est = np.abs(cur - prev)
                if level >= 2 and np.all(converged(prev, cur, cfg)):
                    break
            prev = cur
    if not np.all(np.isfinite(cur)):
        raise LerchDomainError("non-finite value in the Phi integral")
    g = complex(rgamma(u))
    return g * cur, abs(g) * (est + 16 * EPS * h * mags)


def lerch_phi_batch(z, u, y, one_minus_z=None, cfg: QuadratureConfig | None = None):
    """Phi(z_k, u, y) for an array of z; returns (values, error estimates).

    ``one_minus_z`` may carry an accurate 1 - z when z is close to 1.
    """
    cfg = cfg or DEFAULT_CONFIG
    z = np.atleast_1d(np.asarray(z, dtype=complex)).ravel()
    omz = (1.0 - z) if one_minus_z is None else np.atleast_1d(np.asarray(one_minus_z, dtype=complex)).ravel()
    u, y = complex(u), complex(y)
    if is_nonpositive_integer(u):
        return _closed_form(omz, int(round(-u.real)), y)

    vals = np.zeros(len(z), dtype=complex)
    errs = np.zeros(len(z))
    r = np.abs(z)
    ser = r <= cfg.series_radius
    if u.real <= 0:
        ser = r < 0.98
    rest = ~ser
    if np.any(rest):
        on_cut = rest & (np.abs(z.imag) <= 1e-15 * r) & (z.real > 1.0)
        if np.any(on_cut):
            raise LerchDomainError(f"z = {z[on_cut][0]} lies on the branch cut (1, inf)")
        at_one = rest & (np.abs(omz) == 0)
        if np.any(at_one) and u.real <= 1:
            raise LerchDomainError("Phi(1, u, y) needs Re u > 1")
        if u.real <= 0:
            raise LerchDomainError("|z| >= 0.98 with Re u <= 0 is outside the supported region")
    if np.any(ser):
        vals[ser], errs[ser] = _series(z[ser], u, y, cfg, float(r[ser].max()))
    if np.any(rest):
        push = rest & (((r <= 1.0) & (y.real <= 1.0)) | (y.real <= 0.0))
        plain = rest & ~push
        if np.any(plain):
            vals[plain], errs[plain] = _integral(z[plain], omz[plain], u, y, cfg)
        if np.any(push):
            k = int(math.floor(1.0 - y.real)) + 1
            _check_y(y, k)
            zp, op = z[push], omz[push]
            head = sum(zp ** n * np.exp(-u * np.log(y + n)) for n in range(k))
            v, e = _integral(zp, op, u, y + k, cfg)
            vals[push] = zp ** k * v + head
            errs[push] = np.abs(zp) ** k * e + 8 * EPS * np.abs(head)
    return vals, errs


def lerch_phi(z, u, y, cfg: QuadratureConfig | None = None) -> ComplexEval:
    """Phi(z, u, y) with an error estimate and the name of the method used."""
    cfg = cfg or DEFAULT_CONFIG
    zc = complex(z)
    vals, errs = lerch_phi_batch(np.array([zc]), u, y, cfg=cfg)
    if is_nonpositive_integer(u) or abs(zc) <= cfg.series_radius or (complex(u).real <= 0 and abs(zc) < 0.98):
        method = "series"
    else:
        method = "integral"
    return ComplexEval(complex(vals[0]), float(errs[0]), method)
