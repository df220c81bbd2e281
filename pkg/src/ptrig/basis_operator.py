"""Dilation operators and the truncated change-of-coordinates operator.

M_n sends a function on [0, 1] to its even 2-periodic extension sampled
at n times the argument; on cosine coefficients it is the index dilation
e_j -> e_nj.  The change-of-coordinates operator

    A = sum over odd j of b_j(p) M_j

maps the classical cosines e_n onto the p-cosines cos_p(n pi_p x).  Its
N x N truncation in coefficient space is sparse: column n >= 1 has an
entry b_m(p) in row k exactly when k = m n with odd m.  Whenever the
basis criterion holds the truncation is diagonally dominant per column
and can be inverted by forward substitution along the divisibility
order, which is how functions are expanded in the p-cosine system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._fast_eval import fast_trig
from .config import DEFAULT_CONFIG, EvalConfig
from .core import PExponent
from .errors import ConvergenceError, DomainError
from .fourier import cosine_coeff
from .quadrature import integrate_panels


@dataclass(eq=False)
class CosineVector:
    """Finite cosine-basis coordinates g(0..N-1).

    dc_halved records the constant-term convention: True means entry 0 is
    the coefficient that multiplies e_0 directly (i.e. the raw integral
    coefficient divided by two).
    """

    coeffs: np.ndarray
    dc_halved: bool = True

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=float)
        if self.coeffs.ndim != 1 or self.coeffs.size < 1:
            raise DomainError("CosineVector requires a 1-d sequence of length >= 1")

    def __len__(self):
        return self.coeffs.size


@dataclass(eq=False)
class TruncatedBasisOp:
    """Sparse N x N truncation of the change-of-coordinates operator."""

    p: float
    N: int
    entries: dict = field(default_factory=dict)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.N, self.N))
        for (k, n), value in self.entries.items():
            out[k, n] = value
        return out

    def matvec(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        if v.shape != (self.N,):
            raise DomainError(f"matvec expects a vector of length {self.N}")
        out = np.zeros(self.N)
        for (k, n), value in self.entries.items():
            out[k] += value * v[n]
        return out

    def column(self, n: int) -> np.ndarray:
        out = np.zeros(self.N)
        for (k, m), value in self.entries.items():
            if m == n:
                out[k] = value
        return out


def apply_dilation(v: CosineVector, n: int, cap: int | None = None) -> CosineVector:
    """Index dilation of cosine coefficients: output at n*j is input at j.

    The constant term is fixed (the dilation of a constant is itself).
    The result has length n*(N-1)+1, or `cap` when given.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"dilation order must be an integer >= 1, got {n!r}")
    n = int(n)
    N = len(v)
    out_len = n * (N - 1) + 1 if cap is None else int(cap)
    if out_len < 1:
        raise DomainError(f"dilation cap must be >= 1, got {cap!r}")
    out = np.zeros(out_len)
    out[0] = v.coeffs[0]
    for j in range(1, N):
        if n * j < out_len:
            out[n * j] = v.coeffs[j]
    return CosineVector(out, dc_halved=v.dc_halved)


def _periodic_even(g, x):
    """Even 2-periodic extension g*(x) with floor-based reduction."""
    y = x - 2.0 * np.floor(x / 2.0)
    y = np.where(y > 1.0, 2.0 - y, y)
    return g(y)


def _ls_norm_pow(f, s: float, breakpoints, config: EvalConfig | None = None) -> float:
    """int_0^1 |f|^s over panels refined from 64 uniform cells plus breakpoints."""
    cfg = config or DEFAULT_CONFIG
    edges = np.unique(
        np.concatenate([np.linspace(0.0, 1.0, 65), np.asarray(breakpoints, float)])
    )
    value, _ = integrate_panels(
        lambda x: np.abs(f(x)) ** s, edges, abs_tol=cfg.rel_tol
    )
    return value


def isometry_check(g, n: int, s: float, config: EvalConfig | None = None) -> float:
    """|  ||M_n g||_s / ||g||_s  -  1 | for an integrable g given as a callable.

    Both norms are computed by panel quadrature with panel edges aligned
    to the fold points k/n of the periodic extension.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"isometry check requires an integer n >= 1, got {n!r}")
    if not s > 1.0:
        raise DomainError(f"isometry check requires s > 1, got {s!r}")
    n = int(n)
    base = _ls_norm_pow(g, s, [], config)
    folds = np.arange(1, n) / n
    dilated = _ls_norm_pow(lambda x: _periodic_even(g, n * x), s, folds, config)
    if base <= 0.0:
        raise DomainError("isometry check requires a function with positive norm")
    return abs((dilated / base) ** (1.0 / s) - 1.0)


def build_truncated_operator(p, N: int, config: EvalConfig | None = None) -> TruncatedBasisOp:
    """Assemble the sparse N x N truncation of the change-of-coordinates map.

    Column 0 is the unit vector (constants map to constants); column
    n >= 1 holds b_m(p) in row m*n for odd m with m*n < N, so the diagonal
    carries b_1(p).
    """
    pexp = PExponent.of(p)
    if not isinstance(N, (int, np.integer)) or N < 2:
        raise DomainError(f"operator truncation requires integer N >= 2, got {N!r}")
    N = int(N)
    entries = {(0, 0): 1.0}
    values = {}
    for m in range(1, N, 2):
        values[m] = cosine_coeff(pexp, m, config)[0]
    for n in range(1, N):
        m = 1
        while m * n < N:
            entries[(m * n, n)] = values[m]
            m += 2
    return TruncatedBasisOp(p=pexp.p, N=N, entries=entries)


def reconstruct_check(p, n: int, N: int, config: EvalConfig | None = None) -> float:
    """Max deviation of column n of the truncated operator from quadrature.

    The direct route computes the cosine coefficients of cos_p(n pi_p x)
    by panel quadrature (with the constant coefficient halved, matching
    the coefficient-space convention of the operator columns).
    """
    pexp = PExponent.of(p)
    if not isinstance(n, (int, np.integer)) or n < 0 or n >= N:
        raise DomainError(f"reconstruct check requires 0 <= n < N, got n={n!r}")
    n = int(n)
    cfg = config or DEFAULT_CONFIG
    op = build_truncated_operator(pexp, N, config)
    col = op.column(n)
    trig = fast_trig(pexp.p)
    direct = np.zeros(N)
    if n == 0:
        direct[0] = 1.0
    else:
        inner = np.arange(2 * n + 1, dtype=float) / (2.0 * n)
        for k in range(N):
            if k == 0:
                edges = inner
            else:
                edges = np.unique(
                    np.concatenate([inner, np.arange(2 * k + 1, dtype=float) / (2.0 * k)])
                )

            def f(x, k=k):
                return trig.cos_scaled(n * x) * np.cos(k * math.pi * x)

            value, _ = integrate_panels(f, edges, abs_tol=cfg.rel_tol)
            direct[k] = value if k == 0 else 2.0 * value
    return float(np.max(np.abs(col - direct)))


def expand_in_pcosine(fhat: CosineVector, p, N: int, config: EvalConfig | None = None):
    """Solve the truncated system A c = fhat for p-cosine coordinates.

    Forward substitution in increasing index order: row k couples c_k to
    the coefficients at proper divisors k/m (odd m >= 3) only.  Returns
    (CosineVector, residual) where the residual is the max-norm defect of
    the truncated system.  A first coefficient below 1e-8 in magnitude
    makes the truncation numerically singular and is reported.
    """
    pexp = PExponent.of(p)
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise DomainError(f"expansion requires integer N >= 1, got {N!r}")
    N = int(N)
    rhs = np.zeros(N)
    take = min(N, len(fhat))
    rhs[:take] = fhat.coeffs[:take]
    b1 = cosine_coeff(pexp, 1, config)[0] if pexp.p != 2.0 else 1.0
    if abs(b1) < 1e-8:
        raise ConvergenceError(
            f"truncated operator is numerically singular: |b_1| = {abs(b1):.3e}"
        )
    coeffs = {}
    for m in range(3, N, 2):
        coeffs[m] = cosine_coeff(pexp, m, config)[0]
    c = np.zeros(N)
    if N > 0:
        c[0] = rhs[0]
    for k in range(1, N):
        acc = rhs[k]
        for m in range(3, k + 1, 2):
            if k % m == 0:
                acc -= coeffs[m] * c[k // m]
        c[k] = acc / b1
    op = build_truncated_operator(pexp, N, config) if N >= 2 else None
    residual = float(np.max(np.abs(op.matvec(c) - rhs))) if op else 0.0
    return CosineVector(c, dc_halved=fhat.dc_halved), residual
