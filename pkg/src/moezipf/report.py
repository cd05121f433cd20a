"""The three-model comparison report and its JSON / text renderings.

JSON schema ``moezipf.fit-report`` version 1 (fields are only ever added)::

    {
      "schema": "moezipf.fit-report", "version": 1,
      "dataset": {"n", "max_value", "distinct", "f1_fraction", "sample_mean"},
      "threshold": int,
      "rows": [                       # Zipf-MLE, MOEZipf-moments, MOEZipf-MLE
        {"fit": {"model", "method", "alpha_hat", "beta_hat", "log_likelihood",
                 "aic", "converged", "iterations", "gradient_norm"},
         "gof": {"x2", "df", "p_value", "n_cells", "observed", "expected"}}
      ],
      "verdict": "<model>-<method>"   # lowest AIC
    }

Rows whose fit failed carry ``"fit": null`` and an ``"error"`` string.
"""

import json
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .errors import NoRoot
from .estimate import FitResult, fit_moezipf_mle, fit_moezipf_moments, fit_zipf_mle
from .gof import GofResult, GroupedCells, group_tail, pearson_chi2

__all__ = ["ReportRow", "FitReport", "build_report"]

SCHEMA = "moezipf.fit-report"
VERSION = 1

_FIT_FIELDS = (
    "model",
    "method",
    "alpha_hat",
    "beta_hat",
    "log_likelihood",
    "aic",
    "converged",
    "iterations",
    "gradient_norm",
)


@dataclass
class ReportRow:
    fit: Optional[FitResult]
    gof: Optional[GofResult]
    error: Optional[str] = None


@dataclass
class FitReport:
    dataset: dict
    threshold: int
    rows: List[ReportRow] = field(default_factory=list)

    @property
    def verdict(self):
        fitted = [r.fit for r in self.rows if r.fit is not None]
        return min(fitted, key=lambda f: f.aic).label if fitted else None

    def row(self, label):
        for r in self.rows:
            if r.fit is not None and r.fit.label == label:
                return r
        raise KeyError(label)

    # -- serialisation ---------------------------------------------------

    def to_dict(self):
        rows = []
        for r in self.rows:
            entry = {"fit": None, "gof": None}
            if r.fit is not None:
                entry["fit"] = {k: getattr(r.fit, k) for k in _FIT_FIELDS}
                if r.fit.extra:
                    entry["fit"]["extra"] = dict(r.fit.extra)
            if r.gof is not None:
                entry["gof"] = {
                    "x2": r.gof.x2,
                    "df": r.gof.df,
                    "p_value": r.gof.p_value,
                    "n_cells": len(r.gof.cells),
                    "observed": r.gof.cells.observed.tolist(),
                    "expected": r.gof.cells.expected.tolist(),
                }
            if r.error is not None:
                entry["error"] = r.error
            rows.append(entry)
        return {
            "schema": SCHEMA,
            "version": VERSION,
            "dataset": dict(self.dataset),
            "threshold": self.threshold,
            "rows": rows,
            "verdict": self.verdict,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d):
        if d.get("schema") != SCHEMA:
            raise ValueError(f"not a {SCHEMA} document")
        threshold = int(d["threshold"])
        rows = []
        for entry in d["rows"]:
            fit = gof = None
            if entry.get("fit") is not None:
                fd = dict(entry["fit"])
                extra = fd.pop("extra", {})
                fit = FitResult(**{k: fd[k] for k in _FIT_FIELDS}, extra=extra)
            if entry.get("gof") is not None:
                gd = entry["gof"]
                cells = GroupedCells(
                    threshold,
                    np.asarray(gd["observed"], dtype=np.int64),
                    np.asarray(gd["expected"], dtype=float),
                )
                gof = GofResult(gd["x2"], gd["df"], gd["p_value"], cells, fit)
            rows.append(ReportRow(fit, gof, entry.get("error")))
        return cls(dict(d["dataset"]), threshold, rows)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    # -- text --------------------------------------------------------------

    def to_text(self):
        ds = self.dataset
        lines = [
            f"n = {ds['n']}   max = {ds['max_value']}   f1/n = {ds['f1_fraction']:.4f}"
            f"   mean = {ds['sample_mean']:.4f}   tail cell >= {self.threshold}",
            "",
        ]
        head = f"{'Distrib.':<18}{'Param.':<8}{'Estimat.':>10}{'log-like.':>14}{'X^2':>12}{'p-val.':>9}{'AIC':>14}"
        rule = "-" * len(head)
        lines += [rule, head, rule]
        names = {"zipf-mle": "Zipf", "moezipf-moments": "MOEZipf (2nd)", "moezipf-mle": "MOEZipf (m.l.e)"}
        for r in self.rows:
            if r.fit is None:
                lines.append(f"{'(failed)':<18}{r.error}")
                lines.append(rule)
                continue
            f, g = r.fit, r.gof
            x2 = f"{g.x2:.2f}" if g else "-"
            pv = f"{g.p_value:.3f}" if g else "-"
            lines.append(
                f"{names.get(f.label, f.label):<18}{'alpha':<8}{f.alpha_hat:>10.3f}"
                f"{f.log_likelihood:>14.2f}{x2:>12}{pv:>9}{f.aic:>14.2f}"
            )
            if f.model == "moezipf":
                lines.append(f"{'':<18}{'beta':<8}{f.beta_hat:>10.3f}")
            lines.append(rule)
        lines.append(f"best model by AIC: {self.verdict}")
        return "\n".join(lines) + "\n"


def _summary(data):
    return {
        "n": data.n,
        "max_value": data.max_value,
        "distinct": len(data),
        "f1_fraction": data.f1 / data.n,
        "sample_mean": data.sample_mean,
    }


def build_report(data, threshold, mean_cutoff=None):
    """Fit Zipf-MLE, MOEZipf-moments and MOEZipf-MLE and test each against ``data``.

    The Zipf fit and the MLE must succeed.  A moments fit that finds no root
    is recorded in its row instead of aborting the report.
    """
    zipf = fit_zipf_mle(data)
    try:
        moments = fit_moezipf_moments(data, mean_cutoff=mean_cutoff)
        moments_err = None
    except NoRoot as exc:
        moments, moments_err = None, f"NoRoot: {exc}"
    mle = fit_moezipf_mle(data, init=(zipf.alpha_hat, 1.0))
    rows = []
    for fit, err in ((zipf, None), (moments, moments_err), (mle, None)):
        if fit is None:
            rows.append(ReportRow(None, None, err))
            continue
        gof = pearson_chi2(group_tail(data, fit, threshold), fit.n_params, model=fit)
        rows.append(ReportRow(fit, gof))
    return FitReport(_summary(data), int(threshold), rows)
