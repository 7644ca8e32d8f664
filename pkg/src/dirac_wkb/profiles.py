"""Mass-profile families for the topological interface.

Three fixed sign-changing profiles are supported: tanh(x), erf(x), and the
algebraic sigmoid x/sqrt(1 + x^2/3).  Each is odd, strictly increasing, and
vanishes at the origin; tanh and erf approach +-1 at infinity while the
algebraic sigmoid approaches +-sqrt(3) (its own printed normalization; see
``limit``).  The continuum threshold used by the spectral routines is
min(limit^2, 0.999), so all three families share the 0.999 cutoff.

Closed forms for m, m', m'' are used throughout; the antiderivative
M(x) = int_0^x m is closed-form for tanh (log cosh) and evaluated by
tanh-sinh quadrature at 1e-10 absolute tolerance for the other two, since M
feeds the zero-mode exponent where errors get amplified by 1/epsilon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DomainError
from .quadrature import integrate_sqrt_endpoints

__all__ = ["MassProfile", "PROFILE_NAMES"]

PROFILE_NAMES = ("tanh", "erf", "sigmoid")

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)
_LN2 = math.log(2.0)

# 8-point Gauss-Legendre rule on [-1, 1], used for cumulative grid integrals
# of the (smooth) mass function between neighbouring grid points.
_GL8_X = np.array([
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498, 0.5255324099163290,
    0.7966664774136267, 0.9602898564975363,
])
_GL8_W = np.array([
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763,
])


def _log_cosh(x):
    ax = np.abs(x)
    return ax + np.log1p(np.exp(-2.0 * ax)) - _LN2


@dataclass(frozen=True)
class MassProfile:
    """One of the admissible mass functions, selected by name."""

    kind: str

    def __post_init__(self):
        if self.kind not in PROFILE_NAMES:
            raise DomainError(f"unknown profile {self.kind!r}; choose from {PROFILE_NAMES}")

    @classmethod
    def from_name(cls, name: str) -> "MassProfile":
        return cls(kind=name.strip().lower())

    # -- pointwise values ---------------------------------------------------

    def m(self, x):
        """Mass value m(x), elementwise."""
        if self.kind == "tanh":
            return np.tanh(x)
        if self.kind == "erf":
            return specfun.erf(x)
        s = 1.0 + np.asarray(x, dtype=float) ** 2 / 3.0
        out = x / np.sqrt(s)
        return float(out) if np.ndim(x) == 0 else out

    def eval(self, x):
        """Return (m, m', m'') at x, elementwise, in closed form."""
        if self.kind == "tanh":
            m = np.tanh(x)
            sech2 = 1.0 - m * m
            return m, sech2, -2.0 * sech2 * m
        if self.kind == "erf":
            m = specfun.erf(x)
            mp = _TWO_OVER_SQRT_PI * np.exp(-np.asarray(x, dtype=float) ** 2)
            mpp = -2.0 * np.asarray(x, dtype=float) * mp
            if np.ndim(x) == 0:
                return m, float(mp), float(mpp)
            return m, mp, mpp
        xa = np.asarray(x, dtype=float)
        s = 1.0 + xa * xa / 3.0
        m = xa / np.sqrt(s)
        mp = s ** -1.5
        mpp = -xa * s ** -2.5
        if np.ndim(x) == 0:
            return float(m), float(mp), float(mpp)
        return m, mp, mpp

    # -- global structure ---------------------------------------------------

    def limit(self) -> float:
        """lim_{x -> +inf} m(x).  Note the sigmoid's limit is sqrt(3), not 1."""
        return math.sqrt(3.0) if self.kind == "sigmoid" else 1.0

    def continuum_threshold(self) -> float:
        """Energy cutoff below which discrete states are trusted."""
        return min(self.limit() ** 2, 0.999)

    def mass_antiderivative(self, x: float) -> float:
        """M(x) = int_0^x m(t) dt; even in x, with M(0) = 0 exactly."""
        x = float(x)
        if not math.isfinite(x):
            raise DomainError(f"mass_antiderivative needs finite x, got {x!r}")
        if self.kind == "tanh":
            return float(_log_cosh(x))
        if x == 0.0:
            return 0.0
        ax = abs(x)
        res = integrate_sqrt_endpoints(lambda t: np.asarray(self.m(t)), 0.0, ax, 1e-10)
        return res.value

    def mass_antiderivative_grid(self, xs: np.ndarray) -> np.ndarray:
        """M evaluated on an ascending grid via cumulative panel quadrature.

        The anchor value M(xs[0]) comes from the scalar route; subsequent
        points accumulate 8-point Gauss-Legendre panel integrals, which for
        these smooth integrands are far below the 1e-10 budget per panel.
        """
        xs = np.asarray(xs, dtype=float)
        if xs.ndim != 1 or xs.size < 2:
            raise DomainError("grid antiderivative needs a 1-d grid of >= 2 points")
        if np.any(np.diff(xs) <= 0):
            raise DomainError("grid must be strictly ascending")
        if self.kind == "tanh":
            return _log_cosh(xs)
        mid = 0.5 * (xs[1:] + xs[:-1])
        half = 0.5 * np.diff(xs)
        nodes = mid[:, None] + half[:, None] * _GL8_X[None, :]
        panel = half * np.sum(_GL8_W[None, :] * self.m(nodes), axis=1)
        out = np.empty_like(xs)
        out[0] = self.mass_antiderivative(xs[0])
        out[1:] = out[0] + np.cumsum(panel)
        return out
