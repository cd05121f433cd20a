"""Fitting Zipf and MOEZipf models to frequency data.

Two estimators are provided for MOEZipf:

* maximum likelihood (:func:`fit_moezipf_mle`), a Nelder-Mead search in the
  unconstrained coordinates ``(log(alpha - 1), log(beta))`` followed by a
  few finite-difference Newton steps;
* the probability-at-one / mean matching estimator
  (:func:`fit_moezipf_moments`), which equates ``P(Y = 1)`` with ``f1 / n``
  and ``E(Y)`` with the sample mean.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy import optimize

from .dist import (
    INFINITE,
    MOEZipfParams,
    moezipf_logpmf,
    moezipf_mean,
    moezipf_pmf,
)
from .errors import (
    AccuracyError,
    ConvergenceError,
    DegenerateData,
    DomainError,
    EmptyData,
    NoRoot,
    NumericalError,
)
from .gof import aic
from .zeta import ZetaCache, hurwitz_tail, riemann_zeta

__all__ = [
    "FrequencyTable",
    "FitResult",
    "log_likelihood",
    "fit_zipf_mle",
    "fit_moezipf_mle",
    "fit_moezipf_moments",
]

ZIPF = "zipf"
MOEZIPF = "moezipf"
MLE = "mle"
MOMENTS = "moments"


class FrequencyTable:
    """Sample stored as sorted distinct values with their counts.

    Parameters
    ----------
    values, counts : array_like of int
        Distinct positive values and their positive counts.  Values are
        sorted on construction; duplicates are merged.

    Examples
    --------
    >>> t = FrequencyTable.from_observations([2, 1, 1, 1])
    >>> t.n, t.sample_mean, dict(t.items())
    (4, 1.25, {1: 3, 2: 1})
    """

    def __init__(self, values, counts):
        values = np.asarray(values)
        counts = np.asarray(counts)
        if values.shape != counts.shape or values.ndim != 1:
            raise DomainError("values and counts must be 1-d arrays of equal length")
        if values.size == 0:
            raise EmptyData("frequency table is empty")
        if np.any(np.floor(values) != values) or np.any(np.floor(counts) != counts):
            raise DomainError("values and counts must be integers")
        values = values.astype(np.int64)
        counts = counts.astype(np.int64)
        if values.min() < 1:
            raise DomainError("values must be >= 1")
        if counts.min() < 1:
            raise DomainError("counts must be >= 1")
        order = np.argsort(values, kind="stable")
        values, counts = values[order], counts[order]
        self.values, starts = np.unique(values, return_index=True)
        self.counts = np.add.reduceat(counts, starts)
        self.values.setflags(write=False)
        self.counts.setflags(write=False)
        self.n = int(self.counts.sum())
        self.sum_log = float(math.fsum((self.counts * np.log(self.values.astype(float))).tolist()))
        self.sample_mean = math.fsum((self.counts * self.values).astype(float).tolist()) / self.n

    @classmethod
    def from_observations(cls, observations):
        obs = np.asarray(observations)
        if obs.size == 0:
            raise EmptyData("no observations")
        values, counts = np.unique(obs, return_counts=True)
        return cls(values, counts)

    @classmethod
    def from_mapping(cls, mapping):
        if not mapping:
            raise EmptyData("no observations")
        keys = sorted(mapping)
        return cls(keys, [mapping[k] for k in keys])

    def items(self):
        return zip(self.values.tolist(), self.counts.tolist())

    def count(self, value):
        idx = np.searchsorted(self.values, value)
        if idx < self.values.size and self.values[idx] == value:
            return int(self.counts[idx])
        return 0

    @property
    def f1(self):
        """Number of observations equal to one."""
        return self.count(1)

    @property
    def max_value(self):
        return int(self.values[-1])

    def __len__(self):
        return self.values.size

    def __eq__(self, other):
        if not isinstance(other, FrequencyTable):
            return NotImplemented
        return np.array_equal(self.values, other.values) and np.array_equal(
            self.counts, other.counts
        )

    def __repr__(self):
        return f"FrequencyTable(n={self.n}, distinct={len(self)}, max={self.max_value})"


@dataclass(frozen=True)
class FitResult:
    model: str
    method: str
    alpha_hat: float
    beta_hat: float
    log_likelihood: float
    aic: float
    converged: bool
    iterations: int
    gradient_norm: Optional[float] = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def n_params(self):
        return 1 if self.model == ZIPF else 2

    @property
    def params(self):
        return MOEZipfParams(self.alpha_hat, self.beta_hat)

    @property
    def label(self):
        return f"{self.model}-{self.method}"


def log_likelihood(params, data, cache=None):
    """Log-likelihood of a frequency table under MOEZipf(alpha, beta).

    Evaluated once per distinct value and weighted by its count.

    Raises
    ------
    NumericalError
        If the probability of some observed value underflows to zero.
    """
    logp = moezipf_logpmf(params, data.values, cache=cache)
    if not np.all(np.isfinite(logp)):
        raise NumericalError(f"pmf underflows on the observed support at {params}")
    return float(np.dot(data.counts, logp))


# -- Zipf -----------------------------------------------------------------


def _dlog_zeta(alpha):
    h = min(1e-5, (alpha - 1.0) / 4.0)
    return (math.log(riemann_zeta(alpha + h)) - math.log(riemann_zeta(alpha - h))) / (2 * h)


def fit_zipf_mle(data):
    """Maximum likelihood estimate of the Zipf exponent.

    Solves ``-zeta'(alpha)/zeta(alpha) = sum(log y_i) / n`` with Brent's
    method; the logarithmic derivative of zeta is a central difference.
    """
    if data.sum_log <= 0:
        raise DegenerateData("all observations equal 1; the Zipf exponent is unbounded")
    target = data.sum_log / data.n

    def score(alpha):
        return -_dlog_zeta(alpha) - target

    lo, hi = 1.0 + 1e-6, 4.0
    while score(hi) > 0:
        lo, hi = hi, hi * 2
        if hi > 1e3:
            raise DegenerateData("Zipf exponent diverges for this sample")
    alpha, info = optimize.brentq(score, lo, hi, xtol=1e-13, rtol=1e-15, full_output=True)
    ll = -alpha * data.sum_log - data.n * math.log(riemann_zeta(alpha))
    return FitResult(
        model=ZIPF,
        method=MLE,
        alpha_hat=alpha,
        beta_hat=1.0,
        log_likelihood=ll,
        aic=aic(ll, 1),
        converged=bool(info.converged),
        iterations=int(info.iterations),
        gradient_norm=abs(score(alpha)),
    )


# -- MOEZipf maximum likelihood --------------------------------------------


def _to_params(theta):
    return MOEZipfParams(1.0 + math.exp(theta[0]), math.exp(theta[1]))


def _from_params(alpha, beta):
    return np.array([math.log(alpha - 1.0), math.log(beta)])


def _objective(data):
    """Negative mean log-likelihood in transformed coordinates."""

    def f(theta):
        if not np.all(np.isfinite(theta)) or abs(theta[0]) > 30 or abs(theta[1]) > 30:
            return np.inf
        try:
            p = _to_params(theta)
            return -log_likelihood(p, data, cache=ZetaCache(p.alpha)) / data.n
        except (NumericalError, AccuracyError, DomainError, OverflowError):
            return np.inf

    return f


def _fd_grad_hess(f, theta, h=1e-4):
    k = theta.size
    f0 = f(theta)
    g = np.zeros(k)
    hess = np.zeros((k, k))
    eye = np.eye(k) * h
    for i in range(k):
        fp, fm = f(theta + eye[i]), f(theta - eye[i])
        g[i] = (fp - fm) / (2 * h)
        hess[i, i] = (fp - 2 * f0 + fm) / (h * h)
        for j in range(i):
            fpp = f(theta + eye[i] + eye[j])
            fpm = f(theta + eye[i] - eye[j])
            fmp = f(theta - eye[i] + eye[j])
            fmm = f(theta - eye[i] - eye[j])
            hess[i, j] = hess[j, i] = (fpp - fpm - fmp + fmm) / (4 * h * h)
    return f0, g, hess


def _newton_polish(f, theta, grad_tol, steps=8):
    fx, g, hess = _fd_grad_hess(f, theta)
    for _ in range(steps):
        if np.linalg.norm(g) <= grad_tol:
            break
        try:
            step = -np.linalg.solve(hess, g)
        except np.linalg.LinAlgError:
            break
        if not np.all(np.linalg.eigvalsh(hess) > 0):
            break
        for shrink in (1.0, 0.5, 0.25, 0.1):
            cand = theta + shrink * step
            fc = f(cand)
            if fc <= fx:
                theta = cand
                break
        else:
            break
        fx, g, hess = _fd_grad_hess(f, theta)
    return theta, fx, float(np.linalg.norm(g))


def fit_moezipf_mle(
    data,
    init=None,
    max_iter=500,
    restarts=5,
    grad_tol=1e-6,
    seed=20120601,
):
    """Maximum likelihood fit of MOEZipf(alpha, beta).

    Parameters
    ----------
    data : FrequencyTable
    init : (alpha, beta), optional
        Starting point; defaults to the Zipf estimate with ``beta = 1``.
    max_iter : int
        Nelder-Mead iteration cap per start.
    restarts : int
        Extra starts jittered around ``init``.  ``converged`` requires the
        two best terminal points to agree within 1e-4.
    grad_tol : float
        Bound on the gradient norm of the mean log-likelihood with respect
        to ``(log(alpha - 1), log(beta))`` at the returned point.
    seed : int
        Seed of the jitter; fixed so repeated fits are identical.

    Raises
    ------
    DegenerateData
        If every observation equals one (the supremum is at ``beta -> 0``).
    ConvergenceError
        If no start reaches ``grad_tol``; the best point is attached.
    """
    if data.f1 == data.n:
        raise DegenerateData("all observations equal 1; the likelihood has no finite maximiser")
    if init is None:
        try:
            a0 = fit_zipf_mle(data).alpha_hat
        except DegenerateData:
            a0 = 2.0
        init = (a0, 1.0)
    theta0 = _from_params(*init)
    f = _objective(data)
    rng = np.random.default_rng(seed)
    starts = [theta0] + [theta0 + rng.normal(scale=0.3, size=2) for _ in range(restarts)]

    runs = []
    total_iter = 0
    for start in starts:
        res = optimize.minimize(
            f,
            start,
            method="Nelder-Mead",
            options=dict(maxiter=max_iter, xatol=1e-10, fatol=1e-15, adaptive=False),
        )
        total_iter += int(res.nit)
        if not np.isfinite(res.fun):
            continue
        theta, fx, gnorm = _newton_polish(f, np.asarray(res.x), grad_tol)
        runs.append((fx, theta, gnorm, res.nit < max_iter))
    if not runs:
        raise ConvergenceError("likelihood is not finite at any start")
    runs.sort(key=lambda r: r[0])
    fx, theta, gnorm, hit_cap_free = runs[0]
    p = _to_params(theta)
    ll = -fx * data.n
    agree = len(runs) < 2 or np.max(np.abs(runs[1][1] - theta)) <= 1e-4
    result = FitResult(
        model=MOEZIPF,
        method=MLE,
        alpha_hat=p.alpha,
        beta_hat=p.beta,
        log_likelihood=ll,
        aic=aic(ll, 2),
        converged=bool(agree and gnorm <= grad_tol),
        iterations=total_iter,
        gradient_norm=gnorm,
    )
    if gnorm > grad_tol:
        raise ConvergenceError(
            f"gradient norm {gnorm:.3g} above {grad_tol} after {total_iter} iterations",
            best=result,
        )
    return result


# -- MOEZipf probability/mean matching --------------------------------------


def fit_moezipf_moments(data, mean_cutoff=None, alpha_max=50.0):
    """Match ``P(Y = 1)`` to ``f1 / n`` and ``E(Y)`` to the sample mean.

    The first equation gives ``beta(alpha) = (n / f1 - 1) / zeta(alpha, 2)``;
    substituting it into the second leaves a scalar equation in ``alpha``,
    solved by Brent's method.

    Parameters
    ----------
    data : FrequencyTable
    mean_cutoff : int, optional
        If given, ``E(Y)`` is replaced by ``sum_{x <= mean_cutoff} x P(Y = x)``,
        which is finite for every ``alpha > 1``.  By default the exact mean
        is used, which only exists for ``alpha > 2``, so the search is
        restricted to that range.
    alpha_max : float
        Initial upper end of the bracket.

    Raises
    ------
    DegenerateData
        If no observation, or every observation, equals one.
    NoRoot
        If the mean equation has no sign change in the bracket.
    """
    n, f1, ybar = data.n, data.f1, data.sample_mean
    if f1 == 0 or f1 == n:
        raise DegenerateData(f"need 0 < f1 < n (f1={f1}, n={n})")
    ratio = n / f1 - 1.0

    def beta_of(alpha):
        return ratio / hurwitz_tail(alpha, 2)

    if mean_cutoff is None:
        lo = 2.0 + 1e-6

        def mean_of(alpha):
            return moezipf_mean(MOEZipfParams(alpha, beta_of(alpha)))

    else:
        lo = 1.0 + 1e-6
        xs = np.arange(1, int(mean_cutoff) + 1)

        def mean_of(alpha):
            pmf = moezipf_pmf(MOEZipfParams(alpha, beta_of(alpha)), xs)
            return float(np.dot(xs, pmf))

    def h(alpha):
        m = mean_of(alpha)
        return (INFINITE if m == INFINITE else m) - ybar

    hi = alpha_max
    h_lo = h(lo)
    h_hi = h(hi)
    while h_hi > 0 and hi < 1e3:
        hi *= 2
        h_hi = h(hi)
    diagnostics = dict(bracket=(lo, hi), h_lo=h_lo, h_hi=h_hi, f1=f1, n=n, ybar=ybar)
    if not (h_lo > 0 > h_hi):
        raise NoRoot("mean equation has no sign change in the bracket", diagnostics)
    alpha, info = optimize.brentq(h, lo, hi, xtol=1e-12, rtol=1e-14, full_output=True)
    beta = beta_of(alpha)
    params = MOEZipfParams(alpha, beta)
    ll = log_likelihood(params, data)
    return FitResult(
        model=MOEZIPF,
        method=MOMENTS,
        alpha_hat=alpha,
        beta_hat=beta,
        log_likelihood=ll,
        aic=aic(ll, 2),
        converged=bool(info.converged),
        iterations=int(info.iterations),
        gradient_norm=None,
        extra={"mean_cutoff": mean_cutoff} if mean_cutoff is not None else {},
    )
