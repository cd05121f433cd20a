"""Pearson chi-square goodness of fit with a pooled tail cell, and AIC."""

import math
import warnings
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from .dist import MOEZipfParams, moezipf_pmf, moezipf_survival
from .errors import DegenerateCells, DomainError

__all__ = [
    "GroupedCells",
    "GofResult",
    "group_tail",
    "pearson_chi2",
    "chi2_upper_tail",
    "aic",
]


def aic(log_likelihood, n_params):
    """Akaike information criterion ``2k - 2 loglik``."""
    return 2.0 * n_params - 2.0 * log_likelihood


@dataclass(frozen=True)
class GroupedCells:
    """Singleton cells ``1..threshold-1`` followed by the tail cell ``[threshold, inf)``."""

    threshold: int
    observed: np.ndarray
    expected: np.ndarray

    @property
    def labels(self):
        singles = [(x, x) for x in range(1, self.threshold)]
        return singles + [(self.threshold, None)]

    def __len__(self):
        return self.observed.size


@dataclass(frozen=True)
class GofResult:
    x2: float
    df: int
    p_value: float
    cells: GroupedCells
    model: Optional[Any] = None


def _params_of(model):
    if isinstance(model, MOEZipfParams):
        return model
    return model.params


def group_tail(data, model, threshold):
    """Observed and expected counts with every value ``>= threshold`` pooled.

    ``model`` is a :class:`~moezipf.estimate.FitResult` or a parameter object.
    Interior values that were never observed keep a cell with count zero.
    """
    threshold = int(threshold)
    if threshold < 2 or threshold > data.max_value + 1:
        raise DomainError(
            f"threshold must lie in [2, {data.max_value + 1}] (got {threshold})"
        )
    params = _params_of(model)
    observed = np.zeros(threshold, dtype=np.int64)
    vals = np.minimum(data.values, threshold)
    np.add.at(observed, vals - 1, data.counts)
    expected = np.empty(threshold)
    expected[:-1] = data.n * moezipf_pmf(params, np.arange(1, threshold))
    expected[-1] = data.n * moezipf_survival(params, threshold - 1)
    return GroupedCells(threshold, observed, expected)


def pearson_chi2(cells, n_params, model=None):
    """Pearson statistic, degrees of freedom and upper-tail p-value.

    Degrees of freedom are ``#cells - 1 - n_params``, floored at one.
    """
    exp = cells.expected
    if np.any(exp < 1e-12):
        raise DegenerateCells("a cell has (numerically) zero expected count")
    if np.any(exp < 5):
        warnings.warn(
            f"{int(np.sum(exp < 5))} cell(s) have expected count below 5",
            RuntimeWarning,
            stacklevel=2,
        )
    x2 = float(math.fsum(((cells.observed - exp) ** 2 / exp).tolist()))
    df = max(len(cells) - 1 - int(n_params), 1)
    return GofResult(x2, df, chi2_upper_tail(df, x2), cells, model)


# -- regularised incomplete gamma ---------------------------------------------

_EPS = 1e-16
_TINY = 1e-300


def _lower_series(a, x):
    # P(a, x) = x^a e^-x / Gamma(a+1) * sum_k x^k / ((a+1)...(a+k))
    term = 1.0 / a
    total = term
    ap = a
    for _ in range(10000):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _upper_cf(a, x):
    # Modified Lentz evaluation of the continued fraction for Q(a, x).
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, 10000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h


def chi2_upper_tail(df, x):
    """``P(chi2_df > x)``, the regularised upper incomplete gamma ``Q(df/2, x/2)``.

    >>> round(chi2_upper_tail(2, 3.0), 12) == round(math.exp(-1.5), 12)
    True
    """
    if df < 1:
        raise DomainError("df must be >= 1")
    if x < 0:
        raise DomainError("x must be >= 0")
    a, z = 0.5 * df, 0.5 * x
    if z == 0.0:
        return 1.0
    if z < a + 1.0:
        return min(1.0, max(0.0, 1.0 - _lower_series(a, z)))
    return min(1.0, max(0.0, _upper_cf(a, z)))
