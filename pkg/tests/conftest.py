"""Shared fixtures and independent oracles for the test suite.

The oracles deliberately avoid the code paths they check: direct
Euler-Maclaurin summation for zeta-type sums, the regularized incomplete
beta function for the quarter-period integral and its inverse, and a
trapezoid/FFT route for bulk Fourier coefficients.
"""

import math

import numpy as np
import pytest
from scipy.special import betainc, betaincinv


def zeta_oracle(q: float, terms: int = 1_000_000) -> float:
    """zeta(q) by direct summation with Euler-Maclaurin tail correction."""
    n = np.arange(1, terms + 1, dtype=float)
    partial = float(np.sum(n ** (-q)))
    N = float(terms)
    tail = N ** (1.0 - q) / (q - 1.0) - 0.5 * N ** (-q) + q * N ** (-q - 1.0) / 12.0
    return partial + tail


def odd_sum_oracle(q: float, terms: int = 1_000_000) -> float:
    """Sum of j^-q over odd j, summing `terms` terms plus a midpoint tail."""
    j = np.arange(1, 2 * terms, 2, dtype=float)
    partial = float(np.sum(j ** (-q)))
    N = j[-1]
    tail = (N + 1.0) ** (1.0 - q) / (2.0 * (q - 1.0)) - q * (N + 1.0) ** (
        -q - 1.0
    ) / 12.0
    return partial + tail


def incomplete_F_oracle(y, p: float):
    """Quarter-period integral through the regularized incomplete beta."""
    from ptrig import pi_p

    y = np.asarray(y, dtype=float)
    return (pi_p(p) / 2.0) * betainc(1.0 / p, 1.0 - 1.0 / p, y**p)


def sin_p_oracle(u, p: float):
    """Inverse of the quarter-period integral via the inverse beta."""
    from ptrig import pi_p

    u = np.asarray(u, dtype=float)
    frac = np.clip(u / (pi_p(p) / 2.0), 0.0, 1.0)
    return betaincinv(1.0 / p, 1.0 - 1.0 / p, frac) ** (1.0 / p)


def cosine_coeffs_fft(p: float, samples: int = 2**20) -> np.ndarray:
    """All cosine coefficients of cos_p(pi_p x) by trapezoid/FFT.

    Index j of the result approximates b_j with aliasing error of the
    order of the coefficients beyond 2*samples, i.e. far below 1e-8 for
    every exponent exercised here.
    """
    from ptrig._fast_eval import fast_trig

    trig = fast_trig(p)
    g = trig.cos_scaled(np.arange(samples + 1) / samples)
    ext = np.concatenate([g, g[-2:0:-1]])
    return np.fft.rfft(ext).real / samples


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260810)
