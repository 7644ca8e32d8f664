"""Finite-difference discretization of one pseudo-spin sector.

The squared operator splits into scalar Hamiltonians
H = -eps^2 d^2/dx^2 + m(x)^2 + sigma_d * eps * m'(x) with sigma_d = -1 for
the upper component and +1 for the lower.  Each is discretized on a uniform
grid over [-12, 12] with the fourth-order five-point stencil (coefficients
5/2, -4/3, 1/12 over h^2) and hard Dirichlet truncation: rows near the box
edge simply drop out-of-range stencil entries, which is harmless because
the box edges sit deep in the classically forbidden region.  The result is
a symmetric pentadiagonal matrix stored as three bands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, DomainError
from .profiles import MassProfile

__all__ = [
    "BandedSymmetricMatrix",
    "Grid",
    "build_sector",
    "default_grid",
    "matvec",
    "sector_potential",
]

BOX_HALFWIDTH = 12.0
MIN_POINTS = 1200


@dataclass(frozen=True)
class Grid:
    """Uniform 1-d grid with n points spanning [a, b] inclusive."""

    a: float
    b: float
    n: int

    def __post_init__(self):
        if self.n < 5:
            raise DomainError(f"five-point stencil needs n >= 5, got {self.n}")
        if not self.b > self.a:
            raise DomainError(f"need a < b, got [{self.a}, {self.b}]")

    @property
    def h(self) -> float:
        return (self.b - self.a) / (self.n - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.a, self.b, self.n)


def default_grid(epsilon: float) -> Grid:
    """Protocol grid: at least 1200 points, refined so that h << epsilon."""
    eps = float(epsilon)
    if not (0.0 < eps < 1.0):
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon!r}")
    # floor(120/eps) with a nudge against one-ulp under-rounding
    n = max(MIN_POINTS, int(math.floor(120.0 / eps + 1e-9)) + 1)
    return Grid(a=-BOX_HALFWIDTH, b=BOX_HALFWIDTH, n=n)


@dataclass(frozen=True, eq=False)
class BandedSymmetricMatrix:
    """Symmetric pentadiagonal matrix; only the upper bands are stored."""

    diag: np.ndarray   # length n
    off1: np.ndarray   # length n-1
    off2: np.ndarray   # length n-2

    def __post_init__(self):
        n = self.diag.size
        if self.off1.size != n - 1 or self.off2.size != n - 2:
            raise DimensionMismatch("band lengths inconsistent with matrix dimension")
        for band in (self.diag, self.off1, self.off2):
            if not np.all(np.isfinite(band)):
                raise DomainError("matrix bands must be finite")
            band.setflags(write=False)

    @property
    def n(self) -> int:
        return self.diag.size

    def one_norm(self) -> float:
        n = self.n
        colsum = np.abs(self.diag).copy()
        colsum[:-1] += np.abs(self.off1)
        colsum[1:] += np.abs(self.off1)
        colsum[:-2] += np.abs(self.off2)
        colsum[2:] += np.abs(self.off2)
        return float(np.max(colsum)) if n else 0.0

    def to_scipy_banded(self) -> np.ndarray:
        """Upper banded storage understood by scipy.linalg.eig_banded."""
        n = self.n
        band = np.zeros((3, n))
        band[0, 2:] = self.off2
        band[1, 1:] = self.off1
        band[2, :] = self.diag
        return band


def sector_potential(profile: MassProfile, epsilon: float, sigma_d: int, x):
    """Potential m(x)^2 + sigma_d * eps * m'(x) of one sector, elementwise."""
    if sigma_d not in (-1, 1):
        raise DomainError(f"sigma_d must be -1 or +1, got {sigma_d!r}")
    m, mp, _ = profile.eval(x)
    return m * m + sigma_d * epsilon * mp


def build_sector(
    profile: MassProfile, epsilon: float, sigma_d: int, grid: Grid
) -> BandedSymmetricMatrix:
    """Assemble the pentadiagonal matrix of one pseudo-spin sector."""
    eps = float(epsilon)
    if not (0.0 < eps < 1.0):
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon!r}")
    if sigma_d not in (-1, 1):
        raise DomainError(f"sigma_d must be -1 or +1, got {sigma_d!r}")
    xs = grid.points()
    kin = eps * eps / grid.h ** 2
    diag = kin * 2.5 + sector_potential(profile, eps, sigma_d, xs)
    off1 = np.full(grid.n - 1, kin * (-4.0 / 3.0))
    off2 = np.full(grid.n - 2, kin * (1.0 / 12.0))
    return BandedSymmetricMatrix(diag=diag, off1=off1, off2=off2)


def matvec(matrix: BandedSymmetricMatrix, v: np.ndarray) -> np.ndarray:
    """y = H v using the three stored bands symmetrically."""
    v = np.asarray(v, dtype=float)
    if v.shape != (matrix.n,):
        raise DimensionMismatch(f"vector of shape {v.shape} against dimension {matrix.n}")
    y = matrix.diag * v
    y[:-1] += matrix.off1 * v[1:]
    y[1:] += matrix.off1 * v[:-1]
    y[:-2] += matrix.off2 * v[2:]
    y[2:] += matrix.off2 * v[:-2]
    return y
