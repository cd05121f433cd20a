import math
import warnings

import numpy as np
import pytest
import scipy.stats
from hypothesis import given, settings
from hypothesis import strategies as st

from moezipf import (
    DegenerateCells,
    DomainError,
    FrequencyTable,
    GroupedCells,
    MOEZipfParams,
    aic,
    chi2_upper_tail,
    fit_moezipf_mle,
    group_tail,
    moezipf_pmf,
    moezipf_sample,
    moezipf_survival,
    pearson_chi2,
)

# 1 - integral of the chi-square density (scipy.integrate.quad, rel 1e-13)
QUAD = {
    (50, 55.45): 0.2767527539796771,
    (51, 272.38): 5.442385001455581e-32,
    (50, 62.96): 0.10315050730385544,
    (1, 0.5): 0.4795001221869577,
    (7, 3.2): 0.8659047417360982,
    (100, 150.0): 0.0009039320423539979,
}


def test_aic_examples():
    assert aic(-40196.00, 1) == 80394.00
    assert aic(-40082.42, 2) == pytest.approx(80168.84, abs=1e-9)
    assert aic(0, 0) == 0


@pytest.mark.parametrize("df,x", sorted(QUAD))
def test_upper_tail_against_quadrature(df, x):
    assert chi2_upper_tail(df, x) == pytest.approx(QUAD[(df, x)], abs=1e-10)


def test_upper_tail_words_value():
    assert chi2_upper_tail(50, 55.45) == pytest.approx(0.277, abs=0.02)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.0, 400.0))
def test_upper_tail_df2_closed_form(x):
    assert chi2_upper_tail(2, x) == pytest.approx(math.exp(-x / 2), abs=1e-12)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 300), st.floats(0.0, 1000.0))
def test_upper_tail_matches_scipy(df, x):
    assert chi2_upper_tail(df, x) == pytest.approx(scipy.stats.chi2.sf(x, df), abs=1e-10)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 200), st.floats(0.01, 300.0), st.floats(0.01, 5.0))
def test_upper_tail_monotone(df, x, dx):
    q = chi2_upper_tail(df, x)
    # strictness is only observable away from the rounding floor and ceiling
    if 1e-300 < q < 1 - 1e-12:
        assert chi2_upper_tail(df, x + dx) < q
        assert chi2_upper_tail(df + 1, x) > q


def test_upper_tail_edges():
    assert chi2_upper_tail(5, 0.0) == 1.0
    with pytest.raises(DomainError):
        chi2_upper_tail(0, 1.0)
    with pytest.raises(DomainError):
        chi2_upper_tail(3, -1.0)


# -- grouping -------------------------------------------------------------------


@pytest.fixture(scope="module")
def fitted():
    data = FrequencyTable.from_observations(moezipf_sample(MOEZipfParams(1.9, 1.7), 50000, seed=9))
    return data, fit_moezipf_mle(data)


def test_minimal_grouping(fitted):
    data, fit = fitted
    cells = group_tail(data, fit, 2)
    assert len(cells) == 2 and cells.labels == [(1, 1), (2, None)]
    assert cells.observed.tolist() == [data.f1, data.n - data.f1]
    np.testing.assert_allclose(
        cells.expected,
        [data.n * moezipf_pmf(fit.params, 1), data.n * moezipf_survival(fit.params, 1)],
        rtol=1e-14,
    )


@pytest.mark.parametrize("threshold", [2, 3, 17, 60, 500])
def test_grouping_conserves_mass(fitted, threshold):
    data, fit = fitted
    cells = group_tail(data, fit, threshold)
    assert len(cells) == threshold
    assert cells.observed.sum() == data.n
    assert cells.expected.sum() == pytest.approx(data.n, abs=1e-6)
    assert cells.expected[-1] == pytest.approx(data.n * moezipf_survival(fit.params, threshold - 1), rel=1e-14)


def test_grouping_keeps_empty_cells():
    data = FrequencyTable.from_mapping({1: 10, 2: 4, 5: 2, 9: 1})
    cells = group_tail(data, MOEZipfParams(2, 1), 7)
    assert cells.observed.tolist() == [10, 4, 0, 0, 2, 0, 1]


def test_grouping_rejects_thresholds():
    data = FrequencyTable.from_mapping({1: 3, 4: 1})
    for t in (1, 6):
        with pytest.raises(DomainError):
            group_tail(data, MOEZipfParams(2, 1), t)
    group_tail(data, MOEZipfParams(2, 1), 5)


# -- Pearson statistic ---------------------------------------------------------


def test_perfect_fit():
    exp = np.array([50.0, 30.0, 20.0])
    res = pearson_chi2(GroupedCells(3, exp.astype(np.int64), exp), 0)
    assert (res.x2, res.p_value, res.df) == (0.0, 1.0, 2)


def test_statistic_and_df(fitted):
    data, fit = fitted
    res = pearson_chi2(group_tail(data, fit, 20), 2, model=fit)
    o, e = res.cells.observed, res.cells.expected
    assert res.x2 == pytest.approx(float(np.sum((o - e) ** 2 / e)), rel=1e-9)
    assert res.df == 17
    assert res.p_value == pytest.approx(scipy.stats.chi2.sf(res.x2, 17), abs=1e-10)
    assert res.model is fit


def test_df_floor():
    cells = GroupedCells(2, np.array([6, 4]), np.array([5.0, 5.0]))
    assert pearson_chi2(cells, 2).df == 1


def test_small_expected_warns_and_zero_raises():
    cells = GroupedCells(2, np.array([3, 1]), np.array([3.5, 0.5]))
    with pytest.warns(RuntimeWarning, match="below 5"):
        pearson_chi2(cells, 0)
    with pytest.raises(DegenerateCells):
        pearson_chi2(GroupedCells(2, np.array([3, 0]), np.array([3.0, 1e-13])), 0)


def test_no_warning_when_cells_are_large():
    cells = GroupedCells(2, np.array([60, 40]), np.array([55.0, 45.0]))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        pearson_chi2(cells, 0)


# -- Moby Dick (needs data/words.txt) -----------------------------------------


@pytest.mark.dataset
def test_words_grouping_and_published_fit(words):
    zipf = pearson_chi2(group_tail(words, MOEZipfParams(1.775, 1.0), 53), 1)
    moe = pearson_chi2(group_tail(words, MOEZipfParams(1.944, 1.523), 53), 2)
    assert len(zipf.cells) == 53 and zipf.cells.observed.min() > 0
    assert zipf.x2 == pytest.approx(272.38, rel=0.02)
    assert zipf.p_value < 1e-20
    assert moe.x2 == pytest.approx(55.45, rel=0.02)
    assert moe.df == 50
    assert moe.p_value == pytest.approx(0.293, abs=0.03)
