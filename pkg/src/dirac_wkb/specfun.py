"""Self-contained special-function kernel: erf and the Airy function Ai.

Nothing here depends on an external special-function library.  The error
function uses the scaled Maclaurin series (all-positive terms, no
cancellation) for small arguments and the Laplace continued fraction for the
complementary function at large arguments.  Ai and Ai' combine the two
standard Maclaurin series near the origin with the large-|zeta| asymptotic
expansions, bridged on 4.5 < |zeta| <= 9 by Taylor continuation of the
defining equation psi'' = zeta * psi.  The bridge exists because summing the
Maclaurin series out to |zeta| ~ 8 loses most significant digits to
cancellation on the positive axis, while the asymptotic series has not yet
become accurate there; marching the ODE inward from the asymptotic regime
(the direction in which the growing solution dies away) is stable and keeps
the relative error near machine precision across the seam.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = ["AiryValue", "airy", "erf"]

_SQRT_PI = math.sqrt(math.pi)

# Ai(0) = 3**(-2/3)/Gamma(2/3) and Ai'(0) = -3**(-1/3)/Gamma(1/3).
_AI_ZERO = 0.35502805388781723926
_AIP_ZERO = -0.25881940379280679840

# Branch boundaries for airy().
_SERIES_EDGE = 4.5
_ASYMPTOTIC_EDGE = 9.0
_DOMAIN_EDGE = 50.0


@dataclass(frozen=True)
class AiryValue:
    """Ai and Ai' evaluated at a (real, dimensionless) argument."""

    ai: float
    ai_prime: float
    zeta: float


# ---------------------------------------------------------------------------
# error function
# ---------------------------------------------------------------------------

def _erf_series(ax: np.ndarray) -> np.ndarray:
    # erf(x) = (2/sqrt(pi)) x e^{-x^2} * sum_n (2x^2)^n / (1*3*...*(2n+1));
    # every term is positive, so there is no cancellation to amplify roundoff.
    x2 = 2.0 * ax * ax
    term = np.ones_like(ax)
    total = np.ones_like(ax)
    for n in range(1, 160):
        term = term * x2 / (2.0 * n + 1.0)
        total += term
        if np.all(term <= 1e-18 * total):
            break
    return (2.0 / _SQRT_PI) * ax * np.exp(-ax * ax) * total


def _erfc_cf(ax: np.ndarray) -> np.ndarray:
    # Laplace continued fraction for erfc, evaluated with the modified Lentz
    # algorithm: sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + ...))).
    tiny = 1e-300
    f = ax.copy()
    c = f.copy()
    d = np.zeros_like(ax)
    for n in range(1, 80):
        an = 0.5 * n
        d = ax + an * d
        d[np.abs(d) < tiny] = tiny
        d = 1.0 / d
        c = ax + an / c
        c[np.abs(c) < tiny] = tiny
        delta = c * d
        f = f * delta
        if np.all(np.abs(delta - 1.0) < 1e-16):
            break
    return np.exp(-ax * ax) / (_SQRT_PI * f)


def erf(x):
    """Error function, elementwise (scalars or numpy arrays).

    Absolute error <= 1e-12.  Oddness is exact by construction: negative
    arguments are evaluated as -erf(|x|).
    """
    scalar = np.ndim(x) == 0
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty_like(xa)
    ax = np.abs(xa)
    small = ax <= 3.2
    large = ax >= 6.2
    mid = ~(small | large)
    if np.any(small):
        out[small] = _erf_series(ax[small])
    if np.any(mid):
        out[mid] = 1.0 - _erfc_cf(ax[mid])
    out[large] = 1.0  # erfc(6.2) ~ 2e-18, far below the 1e-12 contract
    out[xa < 0] = -out[xa < 0]
    if scalar:
        return float(out[0])
    return out.reshape(np.shape(x))


# ---------------------------------------------------------------------------
# Airy Ai
# ---------------------------------------------------------------------------

def _airy_series(z: float) -> tuple[float, float]:
    # Ai = c1*f - c2*g with f'' = z f, f(0)=1, f'(0)=0 and g(0)=0, g'(0)=1.
    c1 = _AI_ZERO
    c2 = -_AIP_ZERO
    z3 = z * z * z
    # f-series and its derivative
    tf = 1.0
    f = 1.0
    fp = 0.0
    for k in range(1, 60):
        # t_k multiplies z^{3k}; derivative term is 3k * t_k / z * z^{3k}
        tf = tf * z3 / ((3.0 * k - 1.0) * (3.0 * k))
        f += tf
        if z != 0.0:
            fp += 3.0 * k * tf / z
        if abs(tf) < 1e-18 * abs(f) + 1e-300:
            break
    # g-series and its derivative
    tg = z
    g = z
    gp = 1.0
    for k in range(1, 60):
        tg = tg * z3 / ((3.0 * k) * (3.0 * k + 1.0))
        g += tg
        if z != 0.0:
            gp += (3.0 * k + 1.0) * tg / z
        if abs(tg) < 1e-18 * (abs(g) + 1.0):
            break
    return c1 * f - c2 * g, c1 * fp - c2 * gp


def _asym_coeff(k: int, u: float) -> float:
    # u_{k+1} = u_k (6k+5)(6k+1) / (72(k+1)), u_0 = 1.
    return u * (6.0 * k + 5.0) * (6.0 * k + 1.0) / (72.0 * (k + 1.0))


def _airy_asym_pos(z: float) -> tuple[float, float]:
    # DLMF 9.7.5/9.7.6 for z -> +inf, truncated at the smallest term.
    w = (2.0 / 3.0) * z ** 1.5
    su = 1.0
    sv = 1.0
    u = 1.0
    term_u = 1.0
    sign = 1.0
    for k in range(0, 60):
        u_next = _asym_coeff(k, u)
        v_next = u_next * (6.0 * (k + 1) + 1.0) / (1.0 - 6.0 * (k + 1))
        t = u_next / w ** (k + 1)
        if abs(t) >= abs(term_u):
            break  # series started to diverge; stop at the smallest term
        sign = -sign
        su += sign * t
        sv += sign * v_next / w ** (k + 1)
        term_u = t
        u = u_next
        if abs(t) < 1e-17:
            break
    pref = math.exp(-w) / (2.0 * _SQRT_PI * z ** 0.25)
    ai = pref * su
    aip = -(z ** 0.25) * math.exp(-w) / (2.0 * _SQRT_PI) * sv
    return ai, aip


def _airy_asym_neg(z: float) -> tuple[float, float]:
    # DLMF 9.7.9/9.7.10 for z -> -inf.
    t = -z
    w = (2.0 / 3.0) * t ** 1.5
    # u_k and v_k up to the truncation point
    us = [1.0]
    for k in range(0, 40):
        us.append(_asym_coeff(k, us[-1]))
    vs = [1.0] + [us[k] * (6.0 * k + 1.0) / (1.0 - 6.0 * k) for k in range(1, len(us))]

    def alt_sum(coeffs, offset):
        total = 0.0
        best = math.inf
        for k in range(len(coeffs)):
            term = coeffs[k] / w ** (2 * k + offset)
            if abs(term) >= best:
                break
            total += (-1.0) ** k * term
            best = abs(term)
        return total

    pe = alt_sum(us[0::2], 0)   # even u-terms
    po = alt_sum(us[1::2], 1)   # odd u-terms
    re = alt_sum(vs[0::2], 0)
    ro = alt_sum(vs[1::2], 1)
    cw = math.cos(w - 0.25 * math.pi)
    sw = math.sin(w - 0.25 * math.pi)
    ai = (cw * pe + sw * po) / (_SQRT_PI * t ** 0.25)
    aip = (sw * re - cw * ro) * t ** 0.25 / _SQRT_PI
    return ai, aip


def _airy_taylor_step(z0: float, y: float, yp: float, dz: float) -> tuple[float, float]:
    # One Taylor step for psi'' = z psi about z0:
    #   a_{n+2} = (z0 a_n + a_{n-1}) / ((n+1)(n+2)), a_{-1} := 0.
    a = [y, yp, 0.5 * z0 * y]
    for n in range(1, 28):
        a.append((z0 * a[n] + a[n - 1]) / ((n + 1.0) * (n + 2.0)))
    val = 0.0
    der = 0.0
    for n in range(len(a) - 1, 0, -1):
        val = val * dz + a[n]
        der = der * dz + n * a[n]
    val = val * dz + a[0]
    return val, der


def _airy_march(z_from: float, z_to: float, y: float, yp: float) -> tuple[float, float]:
    span = z_to - z_from
    steps = max(1, int(math.ceil(abs(span) / 0.375)))
    dz = span / steps
    z = z_from
    for _ in range(steps):
        y, yp = _airy_taylor_step(z, y, yp, dz)
        z += dz
    return y, yp


def airy(zeta: float) -> AiryValue:
    """Airy function Ai and its derivative at a real argument.

    Valid for |zeta| <= 50; raises DomainError beyond, where callers are
    expected to switch to the closed asymptotic forms themselves.  Relative
    accuracy is ~1e-12 away from the zeros of Ai on the negative axis (near
    a zero the error stays small relative to the local oscillation
    amplitude, as for any fixed-precision evaluation).
    """
    z = float(zeta)
    if not math.isfinite(z) or abs(z) > _DOMAIN_EDGE:
        raise DomainError(f"airy argument {zeta!r} outside |zeta| <= {_DOMAIN_EDGE}")
    if abs(z) <= _SERIES_EDGE:
        ai, aip = _airy_series(z)
    elif z > _ASYMPTOTIC_EDGE:
        ai, aip = _airy_asym_pos(z)
    elif z < -_ASYMPTOTIC_EDGE:
        ai, aip = _airy_asym_neg(z)
    elif z > 0.0:
        # seed in the asymptotic regime, march down (stable direction)
        ai, aip = _airy_asym_pos(_ASYMPTOTIC_EDGE)
        ai, aip = _airy_march(_ASYMPTOTIC_EDGE, z, ai, aip)
    else:
        # oscillatory regime: march outward from the trusted series anchor
        ai, aip = _airy_series(-_SERIES_EDGE)
        ai, aip = _airy_march(-_SERIES_EDGE, z, ai, aip)
    return AiryValue(ai=ai, ai_prime=aip, zeta=z)
