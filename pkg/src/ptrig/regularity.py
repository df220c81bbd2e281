"""Sobolev-regularity diagnostics for the rescaled p-sine.

The sine coefficients obey

    |a_j| <= 16 pi_p^2 c_p / pi^3 * j^-3                       (1 < p < 2)
    |a_j| <= 2 pi_p pi_p' / (pi^3 (p-1)) (2 + pi^2 (p-2)/2) j^-(p'+1)
                                                               (p > 2, j >= 3)

so sin_p(pi_p .) lies in the Sobolev space of every order below
r(p) = p' + 1/2 when p > 2.  This module exposes the weighted partial
sums, slack checks for the two bounds, and a log-log decay-slope
estimate over the computed coefficients.  Slope assertions downstream
are one-sided: the upper bounds are proven, their sharpness is not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import EvalConfig
from .core import PExponent, c_p, pi_p
from .errors import DomainError, InsufficientCoefficients
from .fourier import sine_coeff

PI = math.pi

NOISE_FLOOR = 1e-13
_MIN_FIT_POINTS = 8


@dataclass(frozen=True)
class RegularityReport:
    """Weighted-sum and decay diagnostics at one exponent."""

    p: float
    rho: float
    J: int
    partial_sum: float
    slope_estimate: float
    r_threshold: float | None


def sobolev_partial(p, rho: float, J: int, config: EvalConfig | None = None) -> float:
    """Partial sum of (1 + j^2)^rho a_j^2 over odd j <= J."""
    if not rho >= 0.0:
        raise DomainError(f"sobolev_partial requires rho >= 0, got {rho!r}")
    if J < 1:
        raise DomainError(f"sobolev_partial requires J >= 1, got {J!r}")
    pexp = PExponent.of(p)
    total = 0.0
    for j in range(1, J + 1, 2):
        a, _ = sine_coeff(pexp, j, config)
        total += (1.0 + j * j) ** rho * a * a
    return total


def sine_bound_small_p(p: float, j: int) -> float:
    """Decay bound 16 pi_p^2 c_p / pi^3 * j^-3 for 1 < p < 2."""
    if not 1.0 < p < 2.0:
        raise DomainError(f"small-p sine bound requires 1 < p < 2, got {p!r}")
    return 16.0 * pi_p(p) ** 2 * c_p(p) / PI**3 / float(j) ** 3


def sine_bound_large_p(p: float, j: int) -> float:
    """Decay bound scaling like j^-(p'+1) for p > 2, odd j >= 3."""
    if not p > 2.0:
        raise DomainError(f"large-p sine bound requires p > 2, got {p!r}")
    if j < 3:
        raise DomainError(f"large-p sine bound requires j >= 3, got {j!r}")
    conj = p / (p - 1.0)
    pref = 2.0 * pi_p(p) * pi_p(conj) / (PI**3 * (p - 1.0))
    return pref * (2.0 + 0.5 * PI * PI * (p - 2.0)) * float(j) ** (-(conj + 1.0))


def sine_bound_check_small_p(p: float, J: int, config: EvalConfig | None = None) -> float:
    """Worst slack (bound - |a_j|) over odd j <= J for 1 < p < 2."""
    slacks = [
        sine_bound_small_p(p, j) - abs(sine_coeff(p, j, config)[0])
        for j in range(1, J + 1, 2)
    ]
    return min(slacks)


def sine_bound_check_large_p(p: float, J: int, config: EvalConfig | None = None) -> float:
    """Worst slack (bound - |a_j|) over odd 3 <= j <= J for p > 2."""
    if J < 3:
        raise DomainError(f"large-p sine bound check requires J >= 3, got {J!r}")
    slacks = [
        sine_bound_large_p(p, j) - abs(sine_coeff(p, j, config)[0])
        for j in range(3, J + 1, 2)
    ]
    return min(slacks)


def decay_slope(p, Jmax: int, config: EvalConfig | None = None) -> float:
    """Least-squares slope of log|a_j| against log j over odd j in [11, Jmax].

    Coefficients at or below the 1e-13 noise floor are excluded; fewer
    than eight usable points (the classical p = 2 case in particular)
    raise InsufficientCoefficients.
    """
    if Jmax < 51:
        raise DomainError(f"decay_slope requires Jmax >= 51, got {Jmax!r}")
    pexp = PExponent.of(p)
    js, logs = [], []
    for j in range(11, Jmax + 1, 2):
        a, _ = sine_coeff(pexp, j, config)
        if abs(a) > NOISE_FLOOR:
            js.append(math.log(j))
            logs.append(math.log(abs(a)))
    if len(js) < _MIN_FIT_POINTS:
        raise InsufficientCoefficients(
            f"only {len(js)} coefficients above the noise floor for p={pexp.p}"
        )
    slope, _ = np.polyfit(np.asarray(js), np.asarray(logs), 1)
    return float(slope)


def regularity_report(p, rho: float, J: int, config: EvalConfig | None = None) -> RegularityReport:
    """Bundle the weighted partial sum, decay slope, and threshold order."""
    pexp = PExponent.of(p)
    partial = sobolev_partial(pexp, rho, J, config)
    try:
        slope = decay_slope(pexp, max(J, 51), config)
    except InsufficientCoefficients:
        slope = math.nan
    threshold = pexp.p_conj + 0.5 if pexp.p > 2.0 else None
    return RegularityReport(
        p=pexp.p,
        rho=rho,
        J=J,
        partial_sum=partial,
        slope_estimate=slope,
        r_threshold=threshold,
    )
