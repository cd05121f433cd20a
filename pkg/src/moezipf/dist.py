"""Zipf and Marshall-Olkin extended Zipf (MOEZipf) distributions.

The MOEZipf(alpha, beta) survival function is the Marshall-Olkin tilt of the
Zipf survival function::

    S(x) = beta * zeta(alpha, x + 1) / (zeta(alpha) - (1 - beta) * zeta(alpha, x + 1))

All denominators ``zeta(alpha) - (1 - beta) * zeta(alpha, x)`` are evaluated
as ``head(x - 1) + beta * zeta(alpha, x)`` where ``head(m) = sum_{k<=m} k**-alpha``.
Both summands are non-negative, so nothing cancels however large ``beta`` is.
"""

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .errors import AccuracyError, DomainError
from .zeta import (
    ALPHA_MIN,
    ZetaCache,
    hurwitz_tail,
    hurwitz_tail_inverse_many,
    riemann_zeta,
    tail_table,
)

__all__ = [
    "INFINITE",
    "ZipfParams",
    "MOEZipfParams",
    "DiscreteSurvival",
    "Moments",
    "LogLogSeries",
    "zipf_pmf",
    "zipf_survival",
    "zipf_moments",
    "mo_transform",
    "moezipf_survival",
    "moezipf_cdf",
    "moezipf_pmf",
    "moezipf_logpmf",
    "moezipf_quantile",
    "moezipf_mean",
    "moezipf_truncated_mean",
    "moezipf_sample",
    "consecutive_ratio",
    "loglog_series",
]

#: Marker returned for moments that diverge.
INFINITE = math.inf

# Partial sums up to this index are accumulated directly.
_DIRECT_HEAD = 256


@dataclass(frozen=True)
class ZipfParams:
    alpha: float

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and self.alpha > ALPHA_MIN):
            raise DomainError(f"alpha must exceed 1 (got {self.alpha!r})")


@dataclass(frozen=True)
class MOEZipfParams:
    """Parameters of MOEZipf(alpha, beta); ``beta == 1`` is plain Zipf."""

    alpha: float
    beta: float = 1.0

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and self.alpha > ALPHA_MIN):
            raise DomainError(f"alpha must exceed 1 (got {self.alpha!r})")
        if not (np.isfinite(self.beta) and self.beta > 0):
            raise DomainError(f"beta must be positive (got {self.beta!r})")

    @property
    def beta_bar(self):
        return 1.0 - self.beta

    @classmethod
    def from_zipf(cls, params):
        return cls(params.alpha, 1.0)


class Moments(NamedTuple):
    mean: float
    variance: float


def _as_params(params):
    if isinstance(params, MOEZipfParams):
        return params
    if isinstance(params, ZipfParams):
        return MOEZipfParams.from_zipf(params)
    raise TypeError(f"expected ZipfParams or MOEZipfParams, got {type(params).__name__}")


def _int_array(x, low, name="x"):
    arr = np.asarray(x)
    if arr.dtype.kind == "f":
        if not np.all(np.floor(arr) == arr):
            raise DomainError(f"{name} must be integer valued")
        arr = arr.astype(np.int64)
    elif arr.dtype.kind not in "iu":
        raise DomainError(f"{name} must be integer valued")
    if arr.size and arr.min() < low:
        raise DomainError(f"{name} must be >= {low}")
    return arr.astype(np.int64)


def _scalar_or_array(template, values):
    return float(values) if np.ndim(template) == 0 else values


def _head(zc, m):
    """``sum_{k=1}^{m} k**-alpha`` for an integer array ``m >= 0``."""
    m = np.asarray(m, dtype=np.int64)
    out = np.empty(m.shape)
    small = m <= _DIRECT_HEAD
    if small.any():
        k = np.arange(1, _DIRECT_HEAD + 1, dtype=float)
        partial = np.concatenate(([0.0], np.cumsum(np.exp(-zc.alpha * np.log(k)))))
        out[small] = partial[m[small]]
    if (~small).any():
        out[~small] = zc.zeta - zc.tails(m[~small] + 1)
    return out


def _denominator(zc, beta, m):
    """``zeta(alpha) - (1 - beta) * zeta(alpha, m + 1)`` for integers ``m >= 0``."""
    return _head(zc, m) + beta * zc.tails(np.asarray(m) + 1)


# -- Zipf -----------------------------------------------------------------


def zipf_pmf(params, x):
    """Zipf probability ``x**-alpha / zeta(alpha)`` at positive integer(s) ``x``."""
    alpha = params.alpha
    xs = _int_array(x, 1)
    vals = np.exp(-alpha * np.log(xs.astype(float))) / riemann_zeta(alpha)
    return _scalar_or_array(x, vals)


def zipf_survival(params, x):
    """``P(X > x) = zeta(alpha, x + 1) / zeta(alpha)`` for integer(s) ``x >= 0``."""
    xs = _int_array(x, 0)
    zc = ZetaCache(params.alpha)
    return _scalar_or_array(x, zc.tails(xs + 1) / zc.zeta)


def zipf_moments(params):
    """Mean and variance of Zipf(alpha); divergent moments come back as ``INFINITE``.

    >>> zipf_moments(ZipfParams(2.0)).mean
    inf
    """
    a = params.alpha
    z = riemann_zeta(a)
    mean = riemann_zeta(a - 1) / z if a > 2 else INFINITE
    if a > 3:
        z1 = riemann_zeta(a - 1)
        var = (riemann_zeta(a - 2) * z - z1 * z1) / (z * z)
    else:
        var = INFINITE
    return Moments(mean, var)


# -- Marshall-Olkin transform -----------------------------------------------


class DiscreteSurvival:
    """A survival function ``x -> P(W > x)`` on the integers ``x >= 0``.

    Parameters
    ----------
    func : callable
        Maps an integer array to survival probabilities.
    horizon : int
        Point at which :meth:`check` expects the function to be near zero.
    """

    def __init__(self, func: Callable, horizon: int = 10**6):
        self._func = func
        self.horizon = horizon

    def __call__(self, x):
        xs = _int_array(x, 0)
        vals = np.asarray(self._func(xs), dtype=float)
        return _scalar_or_array(x, vals)

    def check(self, upto=1000, tail_tol=0.5):
        """Verify ``S(0) <= 1``, monotonicity on ``0..upto`` and decay at the horizon."""
        vals = np.asarray(self(np.arange(upto + 1)))
        if vals[0] > 1 + 1e-12:
            raise DomainError("survival at 0 exceeds one")
        if np.any(np.diff(vals) > 1e-15):
            raise DomainError("survival function is increasing somewhere")
        if self(self.horizon) > tail_tol:
            raise DomainError("survival function does not decay by the horizon")
        return True

    @classmethod
    def zipf(cls, params):
        return cls(lambda xs: zipf_survival(params, xs))

    @classmethod
    def moezipf(cls, params):
        return cls(lambda xs: moezipf_survival(params, xs))


def mo_transform(base, beta):
    """Marshall-Olkin tilt ``S -> beta*S / (1 - (1 - beta)*S)`` of a survival function."""
    beta = float(beta)
    if not (np.isfinite(beta) and beta > 0):
        raise DomainError(f"beta must be positive (got {beta!r})")

    def tilted(xs):
        s = np.asarray(base(xs), dtype=float)
        if beta == 1.0:
            return s
        # 1 - (1-beta)*s == (1-s) + beta*s, both parts non-negative.
        return beta * s / ((1.0 - s) + beta * s)

    return DiscreteSurvival(tilted, base.horizon)


# -- MOEZipf ------------------------------------------------------------------


def moezipf_survival(params, x):
    """``P(Y > x)`` for integer(s) ``x >= 0``."""
    p = _as_params(params)
    xs = _int_array(x, 0)
    zc = ZetaCache(p.alpha)
    tail = zc.tails(xs + 1)
    vals = p.beta * tail / (_head(zc, xs) + p.beta * tail)
    return _scalar_or_array(x, vals)


def moezipf_cdf(params, x):
    """``P(Y <= x)``; accumulated from the head so small values keep full precision."""
    p = _as_params(params)
    xs = _int_array(x, 0)
    zc = ZetaCache(p.alpha)
    head = _head(zc, xs)
    vals = head / (head + p.beta * zc.tails(xs + 1))
    return _scalar_or_array(x, vals)


def moezipf_logpmf(params, x, cache=None):
    """Natural log of the MOEZipf pmf at positive integer(s) ``x``."""
    p = _as_params(params)
    xs = _int_array(x, 1)
    zc = cache if cache is not None else ZetaCache(p.alpha)
    d_prev = _denominator(zc, p.beta, xs - 1)
    d_here = _denominator(zc, p.beta, xs)
    vals = (
        -p.alpha * np.log(xs.astype(float))
        + math.log(p.beta)
        + math.log(zc.zeta)
        - np.log(d_prev)
        - np.log(d_here)
    )
    return _scalar_or_array(x, vals)


def moezipf_pmf(params, x):
    """MOEZipf probability mass.

    ``x**-alpha * beta * zeta(alpha) / (D(x-1) * D(x))`` with
    ``D(m) = zeta(alpha) - (1 - beta) * zeta(alpha, m + 1)``.
    """
    p = _as_params(params)
    xs = _int_array(x, 1)
    zc = ZetaCache(p.alpha)
    vals = (
        np.exp(-p.alpha * np.log(xs.astype(float)))
        * p.beta
        * zc.zeta
        / (_denominator(zc, p.beta, xs - 1) * _denominator(zc, p.beta, xs))
    )
    return _scalar_or_array(x, vals)


def _tail_target(p, zeta_value, t):
    # S(x) <= t  <=>  zeta(alpha, x+1) <= t*zeta / (beta + (1-beta)*t)
    return t * zeta_value / (p.beta + (1.0 - p.beta) * t)


def moezipf_quantile(params, q):
    """Smallest integer ``x >= 1`` with ``P(Y <= x) >= q`` for ``q`` in ``[0, 1)``."""
    p = _as_params(params)
    qs = np.asarray(q, dtype=float)
    if np.any((qs < 0) | (qs >= 1)):
        raise DomainError("q must lie in [0, 1)")
    z = riemann_zeta(p.alpha)
    target = np.minimum(_tail_target(p, z, 1.0 - qs), z)
    # smallest m >= 1 with zeta(alpha, m) <= target gives x = m - 1
    m = hurwitz_tail_inverse_many(p.alpha, target)
    out = np.maximum(m - 1, 1)
    return int(out) if qs.ndim == 0 else out


def moezipf_sample(params, n, seed=None):
    """Draw ``n`` i.i.d. MOEZipf variates by exact inversion of the survival function.

    Parameters
    ----------
    params : MOEZipfParams or ZipfParams
    n : int
    seed : int, numpy.random.Generator or None
        Same seed, same sequence.

    Returns
    -------
    numpy.ndarray of int64
    """
    p = _as_params(params)
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer (got {n!r})")
    rng = np.random.default_rng(seed)
    t = 1.0 - rng.random(int(n))  # uniform on (0, 1]
    z = riemann_zeta(p.alpha)
    target = np.minimum(_tail_target(p, z, t), z)
    m = hurwitz_tail_inverse_many(p.alpha, target)
    return np.maximum(m - 1, 1)


def consecutive_ratio(params, x):
    """``P(Y = x + 1) / P(Y = x)`` evaluated in its closed product form."""
    p = _as_params(params)
    xs = _int_array(x, 1)
    zc = ZetaCache(p.alpha)
    xf = xs.astype(float)
    vals = (
        np.exp(p.alpha * (np.log(xf) - np.log1p(xf)))
        * _denominator(zc, p.beta, xs - 1)
        / _denominator(zc, p.beta, xs + 1)
    )
    return _scalar_or_array(x, vals)


# -- moments --------------------------------------------------------------


def moezipf_truncated_mean(params, x_max):
    """``sum_{x=1}^{x_max} x * P(Y = x)``; finite for every ``alpha > 1``."""
    p = _as_params(params)
    x_max = int(x_max)
    if x_max < 1:
        raise DomainError("x_max must be >= 1")
    xs = np.arange(1, x_max + 1)
    return float(np.sum(xs * moezipf_pmf(p, xs)))


def moezipf_mean(params, rel_tolerance=1e-9, max_head=1 << 22):
    """Mean of MOEZipf(alpha, beta), ``INFINITE`` when ``alpha <= 2``.

    Computed as ``sum_{x>=0} S(x)``: the first ``N`` survival values are
    summed exactly and the rest is expanded in powers of
    ``(1 - beta) * zeta(alpha, x + 1) / zeta(alpha)``.  The first order term
    is closed-form, the second is bracketed by integrals and the remainder is
    bounded; ``N`` grows until the total bound falls below
    ``rel_tolerance`` times the result.

    Raises
    ------
    AccuracyError
        If no ``N <= max_head`` certifies the tolerance.
    """
    p = _as_params(params)
    a, b = p.alpha, p.beta
    if a <= 2:
        return INFINITE
    z = riemann_zeta(a)
    nn = 1 << 12
    while True:
        table = tail_table(a, nn)  # zeta(a, k) for k = 1..nn+1
        tails = table[:-1]  # zeta(a, x+1) for x = 0..nn-1
        ks = np.arange(1.0, nn)
        head = np.concatenate(([0.0], np.cumsum(np.exp(-a * np.log(ks)))))
        partial = float(np.sum((b * tails / (head + b * tails))[::-1]))
        t_n = table[-1]
        rho = abs(1.0 - b) * t_n / z
        if rho < 0.5:
            # sum_{x>=N} zeta(a, x+1) = zeta(a-1, N+1) - N*zeta(a, N+1)
            first = hurwitz_tail(a - 1, nn + 1) - nn * t_n
            # (x+1)**(1-a) <= (a-1)*zeta(a, x+1) <= x**(1-a)
            inv = 1.0 / (a - 1.0) ** 2
            lo2 = hurwitz_tail(2 * a - 2, nn + 1) * inv
            hi2 = hurwitz_tail(2 * a - 2, nn) * inv
            c = b / z
            tail_sum = c * (first + (1.0 - b) / z * 0.5 * (lo2 + hi2))
            bound = c * (
                abs(1.0 - b) / z * 0.5 * (hi2 - lo2) + rho * rho / (1.0 - rho) * first
            )
            total = partial + tail_sum
            if bound <= rel_tolerance * total:
                return total
        if nn >= max_head:
            raise AccuracyError(
                f"mean of MOEZipf({a}, {b}) not certified to {rel_tolerance} "
                f"with {max_head} exact terms"
            )
        nn *= 4


# -- log-log view ---------------------------------------------------------


@dataclass(frozen=True)
class LogLogSeries:
    """Points ``(log x, log p(x))`` plus the large-``x`` asymptote ``slope*log x + intercept``."""

    log_x: np.ndarray
    log_p: np.ndarray
    slope: float
    intercept: float

    def asymptote(self, log_x=None):
        lx = self.log_x if log_x is None else np.asarray(log_x)
        return self.slope * lx + self.intercept


def loglog_series(params, x_max):
    """Natural-log pmf values for ``x = 1..x_max`` and the tail asymptote."""
    p = _as_params(params)
    if int(x_max) != x_max or x_max < 2:
        raise DomainError("x_max must be an integer >= 2")
    xs = np.arange(1, int(x_max) + 1)
    zc = ZetaCache(p.alpha)
    logp = moezipf_logpmf(p, xs, cache=zc)
    return LogLogSeries(
        log_x=np.log(xs.astype(float)),
        log_p=logp,
        slope=-p.alpha,
        intercept=math.log(p.beta) - math.log(zc.zeta),
    )
