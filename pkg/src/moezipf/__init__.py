"""Zipf and Marshall-Olkin extended Zipf (MOEZipf) distributions.

Evaluation, exact sampling, maximum likelihood and probability/mean
matching estimation, and chi-square / AIC model comparison.
"""

__version__ = "0.1.0"

from .dist import (
    INFINITE,
    DiscreteSurvival,
    LogLogSeries,
    MOEZipfParams,
    ZipfParams,
    consecutive_ratio,
    loglog_series,
    mo_transform,
    moezipf_cdf,
    moezipf_logpmf,
    moezipf_mean,
    moezipf_pmf,
    moezipf_quantile,
    moezipf_sample,
    moezipf_survival,
    moezipf_truncated_mean,
    zipf_moments,
    zipf_pmf,
    zipf_survival,
)
from .errors import (
    AccuracyError,
    ConvergenceError,
    DegenerateCells,
    DegenerateData,
    DomainError,
    EmptyData,
    MOEZipfError,
    NoRoot,
    NumericalError,
    ParseError,
    ZeroValue,
)
from .estimate import (
    FitResult,
    FrequencyTable,
    fit_moezipf_mle,
    fit_moezipf_moments,
    fit_zipf_mle,
    log_likelihood,
)
from .gof import GofResult, GroupedCells, aic, chi2_upper_tail, group_tail, pearson_chi2
from .ingest import IngestSpec, ingest
from .report import FitReport, build_report
from .zeta import (
    ZetaCache,
    ZetaEvalConfig,
    hurwitz_tail,
    hurwitz_tail_inverse,
    riemann_zeta,
)

__all__ = [
    "__version__",
    "INFINITE",
    "DiscreteSurvival",
    "LogLogSeries",
    "MOEZipfParams",
    "ZipfParams",
    "consecutive_ratio",
    "loglog_series",
    "mo_transform",
    "moezipf_cdf",
    "moezipf_logpmf",
    "moezipf_mean",
    "moezipf_pmf",
    "moezipf_quantile",
    "moezipf_sample",
    "moezipf_survival",
    "moezipf_truncated_mean",
    "zipf_moments",
    "zipf_pmf",
    "zipf_survival",
    "AccuracyError",
    "ConvergenceError",
    "DegenerateCells",
    "DegenerateData",
    "DomainError",
    "EmptyData",
    "MOEZipfError",
    "NoRoot",
    "NumericalError",
    "ParseError",
    "ZeroValue",
    "FitResult",
    "FrequencyTable",
    "fit_moezipf_mle",
    "fit_moezipf_moments",
    "fit_zipf_mle",
    "log_likelihood",
    "GofResult",
    "GroupedCells",
    "aic",
    "chi2_upper_tail",
    "group_tail",
    "pearson_chi2",
    "IngestSpec",
    "ingest",
    "FitReport",
    "build_report",
    "ZetaCache",
    "ZetaEvalConfig",
    "hurwitz_tail",
    "hurwitz_tail_inverse",
    "riemann_zeta",
]
