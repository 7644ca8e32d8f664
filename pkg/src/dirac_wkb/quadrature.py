"""Tanh-sinh quadrature and bracketed root finding.

The phase integral integrand sqrt(E - m(x)^2) vanishes like a square root
at both turning points, which ordinary Gauss rules handle poorly.  The
double-exponential (tanh-sinh) substitution pushes the endpoints to
infinity so the trapezoid sum converges geometrically even with algebraic
endpoint singularities.  Eigenvalue solves reduce to scalar root finding on
a monotone phase function, done with Brent's method.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BadBracket, DomainError, NoConvergence

__all__ = [
    "IntegrationResult",
    "find_root_bracketed",
    "integrate_sqrt_endpoints",
    "tanh_sinh_fixed_level",
]

# Beyond |t| ~ 6.1 the double-exponential weight underflows even against an
# inverse-square-root endpoint singularity.
_T_MAX = 6.115
_MACHEPS = 2.220446049250313e-16


@dataclass(frozen=True)
class IntegrationResult:
    value: float
    est_error: float
    evaluations: int


def _nodes(level: int) -> np.ndarray:
    # Positive abscissae t > 0 that are new at this refinement level.
    h = 0.5 ** level
    if level == 0:
        return np.arange(1.0, math.floor(_T_MAX) + 1.0)
    return np.arange(h, _T_MAX, 2.0 * h)


def _tail_contribution(f, a: float, b: float, ts: np.ndarray) -> tuple[float, int]:
    # Sum w(t) [f(x_-) + f(x_+)] over the symmetric node pairs at |t| = ts.
    u = 0.5 * math.pi * np.sinh(ts)
    w = 0.5 * math.pi * np.cosh(ts) / np.cosh(u) ** 2
    d = np.exp(-u) / np.cosh(u)  # = 1 - tanh(u), computed without cancellation
    half = 0.5 * (b - a)
    xr = b - half * d
    xl = a + half * d
    vals = w * (np.asarray(f(xr), dtype=float) + np.asarray(f(xl), dtype=float))
    return float(np.sum(vals[np.isfinite(vals)])), 2 * ts.size


def tanh_sinh_fixed_level(f: Callable, a: float, b: float, level: int) -> float:
    """Tanh-sinh estimate of int_a^b f at a fixed refinement level.

    Exposed so convergence behaviour can be examined level by level; the
    adaptive driver below is what production code calls.
    """
    if not a < b:
        raise DomainError(f"need a < b, got [{a}, {b}]")
    half = 0.5 * (b - a)
    total = 0.5 * math.pi * float(f(np.array([0.5 * (a + b)]))[0])
    for lev in range(level + 1):
        s, _ = _tail_contribution(f, a, b, _nodes(lev))
        if lev == 0:
            total += s
            acc = total
        else:
            acc = 0.5 * acc + (0.5 ** lev) * s
    return half * acc


def integrate_sqrt_endpoints(
    f: Callable,
    a: float,
    b: float,
    tol: float,
    max_level: int = 12,
) -> IntegrationResult:
    """Integrate f over (a, b) with tanh-sinh node doubling.

    f must accept a numpy array of abscissae and return values elementwise;
    it may be endpoint-singular up to C/sqrt(min(x-a, b-x)).  Levels double
    until successive estimates differ by less than tol (absolute) or level
    `max_level` is reached, in which case NoConvergence carries the last
    error estimate.
    """
    if not a < b:
        raise DomainError(f"need a < b, got [{a}, {b}]")
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    center = 0.5 * math.pi * float(np.asarray(f(np.array([mid])), dtype=float)[0])
    evaluations = 1

    s0, n0 = _tail_contribution(f, a, b, _nodes(0))
    evaluations += n0
    acc = center + s0
    value = half * acc
    est = math.inf
    for level in range(1, max_level + 1):
        s, n = _tail_contribution(f, a, b, _nodes(level))
        evaluations += n
        acc = 0.5 * acc + (0.5 ** level) * s
        new_value = half * acc
        est = abs(new_value - value)
        value = new_value
        if est < tol:
            return IntegrationResult(value=value, est_error=est, evaluations=evaluations)
    raise NoConvergence(
        f"tanh-sinh stalled at level {max_level}: est_error={est:.3e} >= tol={tol:.3e}"
    )


def _brent(
    g: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    max_iter: int = 200,
) -> tuple[float, float, int]:
    """Brent root search; returns (root, bracket half-width, iterations)."""
    fa = g(lo)
    fb = g(hi)
    if fa == 0.0:
        return lo, 0.0, 0
    if fb == 0.0:
        return hi, 0.0, 0
    if fa * fb > 0.0:
        raise BadBracket(f"g({lo}) = {fa:.6g} and g({hi}) = {fb:.6g} have the same sign")
    a, b = lo, hi
    c, fc = a, fa
    d = e = b - a
    for it in range(1, max_iter + 1):
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * _MACHEPS * abs(b) + 0.5 * tol
        xm = 0.5 * (c - b)
        if abs(xm) <= tol1 or fb == 0.0:
            return b, abs(xm), it
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            # secant / inverse quadratic interpolation
            s = fb / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e = d
                d = p / q
            else:
                d = xm
                e = d
        else:
            d = xm
            e = d
        a, fa = b, fb
        if abs(d) > tol1:
            b += d
        else:
            b += math.copysign(tol1, xm)
        fb = g(b)
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            d = e = b - a
    raise NoConvergence(f"root not bracketed to {tol} in {max_iter} iterations")


def find_root_bracketed(
    g: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
) -> float:
    """Root of g in [lo, hi] with bracket width <= tol.

    Requires g(lo) * g(hi) <= 0 (BadBracket otherwise); the returned point
    always lies inside the initial bracket.
    """
    root, _, _ = _brent(g, lo, hi, tol)
    return root
