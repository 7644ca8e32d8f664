"""Closed-form benchmark spectrum for the tanh mass profile.

For m = tanh the two pseudo-spin sectors of the squared operator are
Poschl-Teller operators, so every discrete eigenvalue is known exactly:
upper sector 1 - (1 - eps*k)^2 for k = 0..N and lower sector the same list
shifted by one index, with N = floor(1/eps).  These closed forms are the
reference everything else in the package is measured against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = ["PTSpectrum", "pt_counts", "pt_spacing_regimes", "pt_spectrum"]


def _check_epsilon(epsilon: float) -> float:
    eps = float(epsilon)
    if not (0.0 < eps < 1.0):
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon!r}")
    return eps


def _n_cap(eps: float) -> int:
    # The 1e-9 nudge guards against one-ulp under-rounding of 1/eps when the
    # reciprocal is an integer (eps = 0.5, 0.25, 0.2, ...).
    return int(math.floor(1.0 / eps + 1e-9))


@dataclass(frozen=True)
class PTSpectrum:
    """Exact discrete spectrum of both sectors for m = tanh."""

    epsilon: float
    upper: tuple          # 1 - (1 - eps*k)^2, k = 0..N
    lower: tuple          # upper shifted by one index, k = 0..N-1
    n_cap: int
    has_threshold_state: bool  # 1/eps integer puts the top value exactly at 1


def pt_spectrum(epsilon: float) -> PTSpectrum:
    """Exact eigenvalues of both sectors; upper[0] is the zero mode."""
    eps = _check_epsilon(epsilon)
    n = _n_cap(eps)
    upper = tuple(1.0 - (1.0 - eps * k) ** 2 for k in range(n + 1))
    lower = upper[1:]
    at_edge = abs(1.0 / eps - round(1.0 / eps)) < 1e-9
    return PTSpectrum(
        epsilon=eps, upper=upper, lower=lower, n_cap=n, has_threshold_state=at_edge
    )


def pt_counts(epsilon: float) -> tuple[int, int]:
    """(number of distinct squared-operator eigenvalues, number of Dirac ones).

    The squared operator carries floor(1/eps) + 1 distinct values; spectral
    symmetry doubles every nonzero one for the first-order operator, giving
    2*floor(1/eps) + 1.
    """
    eps = _check_epsilon(epsilon)
    n = _n_cap(eps)
    return n + 1, 2 * n + 1


def pt_spacing_regimes(epsilon: float) -> tuple[float, float]:
    """Gap at the spectral bottom (~2 eps) and at the threshold (~2 eps^2).

    Requires floor(1/eps) >= 4 so both regimes are populated.
    """
    eps = _check_epsilon(epsilon)
    spec = pt_spectrum(eps)
    if spec.n_cap < 4:
        raise DomainError(
            f"spacing regimes need floor(1/eps) >= 4; eps={epsilon!r} gives {spec.n_cap}"
        )
    center_gap = spec.upper[1] - spec.upper[0]
    threshold_gap = spec.upper[-1] - spec.upper[-2]
    return center_gap, threshold_gap
