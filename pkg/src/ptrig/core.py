"""Generalized p-trigonometric functions.

sin_p is the inverse of the incomplete integral

    F_p(y) = int_0^y (1 - t^p)^(-1/p) dt,   0 <= y <= 1,

on the quarter period [0, pi_p/2], extended to the real line by oddness,
reflection about pi_p/2, and 2*pi_p periodicity.  cos_p is its derivative,
which on the principal branch equals (1 - sin_p^p)^(1/p).  F_p is computed
by tanh-sinh quadrature (the integrand has an algebraic endpoint
singularity at t = 1), and the inversion uses a safeguarded Newton
iteration with bisection fallback inside the bracket [0, 1].

All quadrant and sign logic follows the extension rules of the p-sine;
there are no trigonometric shortcuts for p != 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import ConvergenceError, DomainError

_EPS = float(np.finfo(float).eps)


def pi_p(p: float) -> float:
    """Half-period scale 2*pi / (p * sin(pi/p)); pi_2 = pi."""
    if not (isinstance(p, (int, float)) and math.isfinite(p) and p > 1):
        raise DomainError(f"p must be a finite real > 1, got {p!r}")
    return 2.0 * math.pi / (p * math.sin(math.pi / p))


@dataclass(frozen=True, init=False)
class PExponent:
    """Validated exponent p > 1 with conjugate p/(p-1) and cached pi_p."""

    p: float
    p_conj: float
    pi_p: float

    def __init__(self, p: float):
        value = float(p)
        if not (math.isfinite(value) and value > 1.0):
            raise DomainError(f"p must be a finite real > 1, got {p!r}")
        object.__setattr__(self, "p", value)
        object.__setattr__(self, "p_conj", value / (value - 1.0))
        object.__setattr__(self, "pi_p", pi_p(value))

    @classmethod
    def of(cls, p) -> "PExponent":
        return p if isinstance(p, PExponent) else cls(p)

    @property
    def conjugate(self) -> "PExponent":
        return PExponent(self.p_conj)

    @property
    def quarter(self) -> float:
        return self.pi_p / 2.0


# ---------------------------------------------------------------------------
# tanh-sinh quadrature of F_p
# ---------------------------------------------------------------------------


def _ts_cutoff(p: float) -> float:
    """Truncation point of the tanh-sinh sum for the F_p integrand.

    The weight decays like exp(-pi*sinh(t)) while the integrand grows at
    most like the inverse 1/p power of the endpoint distance, so the
    product decays like exp(-pi*(1 - 1/p)*sinh(t)).
    """
    decay = math.pi * (1.0 - 1.0 / p)
    t = 4.0
    for _ in range(3):
        t = math.asinh((42.0 + t) / decay)
    return min(max(t, 3.5), 7.5)


@lru_cache(maxsize=256)
def _ts_level(level: int, t_max: float):
    """Nodes of tanh-sinh refinement `level` on [-t_max, t_max].

    Returns (xi, one_minus_xi, weight) where xi = tanh((pi/2) sinh t) and
    weight excludes the step size h.  Level 0 holds all integer t, higher
    levels only the odd multiples of h = 2^-level.
    """
    h = 2.0 ** (-level)
    if level == 0:
        k = np.arange(-math.floor(t_max), math.floor(t_max) + 1.0)
    else:
        kmax = math.floor(t_max / h)
        odd = np.arange(1, kmax + 1, 2, dtype=float)
        k = np.concatenate([-odd[::-1], odd])
    t = k * h
    v = 0.5 * math.pi * np.sinh(t)
    xi = np.tanh(v)
    with np.errstate(over="ignore"):
        one_minus = 2.0 / (1.0 + np.exp(2.0 * v))
    av = np.abs(v)
    sech2 = 4.0 * np.exp(-2.0 * av) / (1.0 + np.exp(-2.0 * av)) ** 2
    w = 0.5 * math.pi * np.cosh(t) * sech2
    return xi, one_minus, w


def _fp_integrand(x, one_minus_x, p):
    """(1 - x^p)^(-1/p) evaluated stably on [0, 1).

    For x <= 1/2 the power x^p is formed directly; closer to the endpoint
    the distance 1 - x is the accurate quantity and 1 - x^p is recovered
    through expm1/log1p.
    """
    x = np.asarray(x)
    out = np.empty_like(x)
    near = x > 0.5
    far = ~near
    if far.any():
        z = x[far] ** p
        out[far] = np.exp(-np.log1p(-z) / p)
    if near.any():
        d = one_minus_x[near]
        w = p * np.log1p(-d)
        out[near] = np.exp(-np.log(-np.expm1(w)) / p)
    return out


def _incomplete_F_batch(y, pexp: PExponent, rel_tol, abs_tol, max_levels):
    """F_p over a batch of upper limits in [0, 1]; returns (values, errors).

    Each element freezes at its own first converged refinement level, so
    the result at a given y is bitwise independent of the rest of the
    batch (callers may partition work arbitrarily).
    """
    y = np.asarray(y, dtype=float)
    out = np.zeros_like(y)
    err = np.zeros_like(y)
    live = y > 0.0
    if not live.any():
        return out, err
    yl = y[live]
    p = pexp.p
    t_max = _ts_cutoff(p)
    half = yl / 2.0
    one_minus_y = 1.0 - yl
    m = yl.size
    cum = np.zeros(m)
    prev = np.zeros(m)
    vals = np.zeros(m)
    errs = np.full(m, np.inf)
    active = np.ones(m, dtype=bool)
    for level in range(max_levels + 1):
        xi, one_minus_xi, w = _ts_level(level, t_max)
        sub_half = half[active]
        x = sub_half[:, None] * (1.0 + xi[None, :])
        d = one_minus_y[active][:, None] + sub_half[:, None] * one_minus_xi[None, :]
        # pairwise row sums: bitwise independent of the batch shape,
        # unlike a BLAS matrix-vector product
        cum[active] += np.sum(_fp_integrand(x, d, p) * w[None, :], axis=1)
        new_vals = 2.0 ** (-level) * cum[active] * sub_half
        vals[active] = new_vals
        if level >= 1:
            errs[active] = np.abs(new_vals - prev[active])
        prev[active] = new_vals
        if level >= 2:
            active &= ~(errs <= rel_tol * np.abs(vals) + abs_tol)
            if not active.any():
                break
    else:
        worst = float(np.max(errs[active]))
        raise ConvergenceError(
            f"tanh-sinh quadrature for F_p did not converge (err {worst:.3e})"
        )
    out[live] = vals
    err[live] = errs
    return out, err


def _cos_from_y(y, p):
    """(1 - y^p)^(1/p) for y in [0, 1], stable near both endpoints."""
    y = np.asarray(y, dtype=float)
    out = np.empty_like(y)
    near = y > 0.5
    far = ~near
    if far.any():
        z = y[far] ** p
        out[far] = np.exp(np.log1p(-z) / p)
    if near.any():
        d = 1.0 - y[near]
        at_one = d <= 0.0
        w = p * np.log1p(-np.where(at_one, 0.5, d))
        c = np.exp(np.log(-np.expm1(w)) / p)
        out[near] = np.where(at_one, 0.0, c)
    return out


def _one_minus_y_pow_p(y, p):
    """1 - y^p for y in [0, 1] without cancellation."""
    y = np.asarray(y, dtype=float)
    out = np.empty_like(y)
    near = y > 0.5
    far = ~near
    if far.any():
        out[far] = -np.expm1(p * np.log(np.where(y[far] > 0.0, y[far], 0.5)))
        out[far] = np.where(y[far] > 0.0, out[far], 1.0)
    if near.any():
        d = 1.0 - y[near]
        out[near] = -np.expm1(p * np.log1p(-d))
    return out


# ---------------------------------------------------------------------------
# quarter-period inversion
# ---------------------------------------------------------------------------


def invert_quarter(u, pexp: PExponent, config: EvalConfig | None = None):
    """Solve F_p(y) = u for u in [0, pi_p/2] by safeguarded Newton.

    The initial guess is the classical sine of the rescaled argument; a
    bisection step replaces Newton whenever the iterate leaves the current
    bracket or fails to halve the residual.  Termination is by residual
    tolerance or bracket collapse to machine width.
    """
    cfg = config or DEFAULT_CONFIG
    u = np.asarray(u, dtype=float)
    u_star = pexp.quarter
    if np.any(u < -1e-15) or np.any(u > u_star * (1.0 + 1e-13)):
        raise DomainError("inversion argument outside [0, pi_p/2]")
    p = pexp.p
    y = np.clip(np.sin(np.pi * u / pexp.pi_p), 0.0, 1.0)
    lo = np.zeros_like(u)
    hi = np.ones_like(u)
    done = np.zeros(u.shape, dtype=bool)
    at0 = u <= 0.0
    at1 = u >= u_star * (1.0 - 4.0 * _EPS)
    y[at0] = 0.0
    y[at1] = 1.0
    done |= at0 | at1
    r_prev = np.full_like(u, np.inf)
    qrel = max(cfg.rel_tol / 20.0, 4.0 * _EPS)
    qabs = cfg.abs_tol / 10.0
    for _ in range(cfg.max_newton_iters):
        if done.all():
            break
        idx = ~done
        F, Ferr = _incomplete_F_batch(y[idx], pexp, qrel, qabs, cfg.quad_levels)
        r = F - u[idx]
        yl, cl, hl = y[idx], lo[idx], hi[idx]
        hl = np.where(r > 0.0, np.minimum(hl, yl), hl)
        cl = np.where(r < 0.0, np.maximum(cl, yl), cl)
        tol = np.maximum(cfg.abs_tol + 8.0 * _EPS * u[idx], 4.0 * Ferr)
        ok = (np.abs(r) <= tol) | (hl - cl <= 4.0 * _EPS)
        step = r * _cos_from_y(yl, p)
        y_new = yl - step
        bisect = (
            (~np.isfinite(y_new))
            | (y_new <= cl)
            | (y_new >= hl)
            | (np.abs(r) > 0.5 * np.abs(r_prev[idx]))
        )
        y_new = np.where(bisect, 0.5 * (cl + hl), y_new)
        lo[idx] = cl
        hi[idx] = hl
        y[idx] = np.where(ok, yl, y_new)
        r_prev[idx] = np.abs(r)
        done[idx] |= ok
    if not done.all():
        idx = ~done
        F, _ = _incomplete_F_batch(y[idx], pexp, qrel, qabs, cfg.quad_levels)
        worst = float(np.max(np.abs(F - u[idx])))
        raise ConvergenceError(
            f"quarter-period inversion exhausted {cfg.max_newton_iters} "
            f"iterations (residual {worst:.3e})"
        )
    return y


def reduce_argument(tau):
    """Map tau = x/pi_p to the quarter period with sine and cosine signs.

    Returns (t, sin_sign, cos_sign) with t in [0, 1/2] such that
    sin_p(pi_p tau) = sin_sign * sin_p(pi_p t) and likewise for cos_p.
    """
    tau = np.asarray(tau, dtype=float)
    t2 = tau - 2.0 * np.round(tau / 2.0)
    a = np.abs(t2)
    refl = a > 0.5
    t = np.where(refl, 1.0 - a, a)
    sin_sign = np.sign(t2)
    cos_sign = np.where(refl, -1.0, 1.0)
    return t, sin_sign, cos_sign


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def _as_batch(x):
    arr = np.asarray(x, dtype=float)
    return np.atleast_1d(arr), arr.ndim == 0


def _scalar_or_array(values, scalar):
    return float(values[0]) if scalar else values


def incomplete_F(y, p, config: EvalConfig | None = None):
    """F_p(y) = int_0^y (1 - t^p)^(-1/p) dt for y in [0, 1].

    Monotone increasing with F_p(0) = 0 and F_p(1) = pi_p/2; the endpoint
    singularity is absorbed by the tanh-sinh transformation.
    """
    pexp = PExponent.of(p)
    cfg = config or DEFAULT_CONFIG
    arr, scalar = _as_batch(y)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError(f"incomplete_F requires 0 <= y <= 1, got {y!r}")
    vals, _ = _incomplete_F_batch(arr, pexp, cfg.rel_tol, cfg.abs_tol, cfg.quad_levels)
    return _scalar_or_array(vals, scalar)


def sin_p(x, p, config: EvalConfig | None = None):
    """The p-sine: odd, 2*pi_p periodic, increasing on [0, pi_p/2]."""
    pexp = PExponent.of(p)
    arr, scalar = _as_batch(x)
    if not np.all(np.isfinite(arr)):
        raise DomainError("sin_p requires finite arguments")
    t, s_sign, _ = reduce_argument(arr / pexp.pi_p)
    y = invert_quarter(pexp.pi_p * t, pexp, config)
    return _scalar_or_array(s_sign * y, scalar)


def cos_p(x, p, config: EvalConfig | None = None):
    """The p-cosine sign(quadrant) * (1 - |sin_p|^p)^(1/p); even, 2*pi_p periodic."""
    pexp = PExponent.of(p)
    arr, scalar = _as_batch(x)
    if not np.all(np.isfinite(arr)):
        raise DomainError("cos_p requires finite arguments")
    t, _, c_sign = reduce_argument(arr / pexp.pi_p)
    y = invert_quarter(pexp.pi_p * t, pexp, config)
    return _scalar_or_array(c_sign * _cos_from_y(y, pexp.p), scalar)


def dcos_p(x, p, config: EvalConfig | None = None):
    """Derivative of cos_p on the first quarter period [0, pi_p/2].

    Equals -sin_p(x)^(p-1) * cos_p(x)^(2-p).  For p > 2 the second factor
    diverges at pi_p/2; arguments where cos_p underflows below 1e-13
    return -inf rather than a garbage float.
    """
    pexp = PExponent.of(p)
    arr, scalar = _as_batch(x)
    if np.any(arr < -1e-15) or np.any(arr > pexp.quarter * (1.0 + 1e-13)):
        raise DomainError("dcos_p requires x in the first quarter period")
    y = invert_quarter(np.clip(arr, 0.0, pexp.quarter), pexp, config)
    c = _cos_from_y(y, pexp.p)
    with np.errstate(divide="ignore", over="ignore"):
        vals = -(y ** (pexp.p - 1.0)) * c ** (2.0 - pexp.p)
    if pexp.p > 2.0:
        vals = np.where(c < 1e-13, -np.inf, vals)
    return _scalar_or_array(vals, scalar)


def d2cos_p(x, p, config: EvalConfig | None = None):
    """Second derivative of cos_p, strictly inside (0, pi_p/2).

    Equals sin_p^(p-2) * cos_p^(3-2p) * (2 - p - cos_p^p); the sign change
    of the bracket locates the extremum of the rescaled derivative.  The
    endpoints are singular for p != 2 and are rejected.
    """
    pexp = PExponent.of(p)
    arr, scalar = _as_batch(x)
    if np.any(arr <= 0.0) or np.any(arr >= pexp.quarter):
        raise DomainError("d2cos_p requires x strictly inside (0, pi_p/2)")
    y = invert_quarter(arr, pexp, config)
    c = _cos_from_y(y, pexp.p)
    bracket = 2.0 - pexp.p - _one_minus_y_pow_p(y, pexp.p)
    vals = y ** (pexp.p - 2.0) * c ** (3.0 - 2.0 * pexp.p) * bracket
    return _scalar_or_array(vals, scalar)


def c_p(p: float) -> float:
    """Extremum magnitude (p-1)^((p-1)/p) * (2-p)^((2-p)/p) on (1, 2).

    Continuous with limit 1 at both ends under the convention 0^0 = 1.
    """
    if not (isinstance(p, (int, float)) and math.isfinite(p) and 1.0 < p < 2.0):
        raise DomainError(f"c_p requires 1 < p < 2, got {p!r}")
    a = p - 1.0
    b = 2.0 - p
    first = math.exp((a / p) * math.log(a)) if a > 0 else 1.0
    second = math.exp((b / p) * math.log(b)) if b > 0 else 1.0
    return first * second


def m_p(p: float, config: EvalConfig | None = None) -> float:
    """Unique point in (0, 1/2) where cos_p(pi_p m)^p = 2 - p, for 1 < p < 2.

    Found by bisection on the decreasing map x -> cos_p(pi_p x)^p - (2-p)
    to absolute tolerance 1e-12; the rescaled derivative attains its
    minimum -c_p there.
    """
    if not (isinstance(p, (int, float)) and math.isfinite(p) and 1.0 < p < 2.0):
        raise DomainError(f"m_p requires 1 < p < 2, got {p!r}")
    pexp = PExponent(p)
    target = 2.0 - p

    def shifted(x):
        y = invert_quarter(np.array([pexp.pi_p * x]), pexp, config)
        return float(_one_minus_y_pow_p(y, p)[0]) - target

    lo, hi = 0.0, 0.5
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if shifted(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def u_p(x, p: float, config: EvalConfig | None = None):
    """Rescaled derivative -sin_p(pi_p x)^(p-1) cos_p(pi_p x)^(2-p) on [0, 1/2].

    Defined for 1 < p < 2; nonpositive, vanishing exactly at 0 and 1/2,
    with minimum -c_p at m_p.
    """
    if not (isinstance(p, (int, float)) and math.isfinite(p) and 1.0 < p < 2.0):
        raise DomainError(f"u_p requires 1 < p < 2, got {p!r}")
    pexp = PExponent(p)
    arr, scalar = _as_batch(x)
    if np.any(arr < 0.0) or np.any(arr > 0.5):
        raise DomainError("u_p requires 0 <= x <= 1/2")
    y = invert_quarter(pexp.pi_p * arr, pexp, config)
    c = _cos_from_y(y, p)
    vals = -(y ** (p - 1.0)) * c ** (2.0 - p)
    return _scalar_or_array(vals, scalar)


def v_p(x, p: float, config: EvalConfig | None = None):
    """Conjugate-side weight (p'-1) sin_p'(pi_p' x)^(p'-2) cos_p'(pi_p' x).

    Defined for p > 2 on (0, 1/2]; positive, strictly decreasing, zero at
    x = 1/2, divergent as x -> 0+ (which is rejected).
    """
    if not (isinstance(p, (int, float)) and math.isfinite(p) and p > 2.0):
        raise DomainError(f"v_p requires p > 2, got {p!r}")
    conj = PExponent(p).conjugate
    arr, scalar = _as_batch(x)
    if np.any(arr <= 0.0) or np.any(arr > 0.5):
        raise DomainError("v_p requires 0 < x <= 1/2 (diverges at 0)")
    q = conj.p
    y = invert_quarter(conj.pi_p * arr, conj, config)
    c = _cos_from_y(y, q)
    vals = (q - 1.0) * y ** (q - 2.0) * c
    return _scalar_or_array(vals, scalar)


def exp_p(y, p, config: EvalConfig | None = None):
    """cos_p(y) + i sin_p(y); the modulus identity |Re|^p + |Im|^p = 1 holds."""
    pexp = PExponent.of(p)
    arr, scalar = _as_batch(y)
    t, s_sign, c_sign = reduce_argument(arr / pexp.pi_p)
    s = invert_quarter(pexp.pi_p * t, pexp, config)
    vals = c_sign * _cos_from_y(s, pexp.p) + 1j * (s_sign * s)
    return complex(vals[0]) if scalar else vals
