import math

import numpy as np
import pytest
import scipy.special
from hypothesis import given, settings
from hypothesis import strategies as st

from moezipf.errors import DomainError
from moezipf.zeta import (
    ZetaCache,
    ZetaEvalConfig,
    hurwitz_tail,
    hurwitz_tail_inverse,
    hurwitz_tail_inverse_many,
    hurwitz_tail_many,
    riemann_zeta,
    tail_table,
)

from frozen import TAIL
from oracles import ALPHAS, XS

alphas = st.floats(1.01, 8.0)
positions = st.integers(1, 10**7)


def rel(a, b):
    return abs(a - b) / abs(b)


def test_closed_forms():
    assert riemann_zeta(2) == pytest.approx(math.pi**2 / 6, rel=1e-14)
    assert riemann_zeta(4) == pytest.approx(math.pi**4 / 90, rel=1e-14)
    assert hurwitz_tail(2, 2) == pytest.approx(math.pi**2 / 6 - 1, rel=1e-13)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("x", XS)
def test_grid_against_direct_sum(alpha, x):
    assert rel(hurwitz_tail(alpha, x), TAIL[(alpha, x)]) <= 1e-10


@pytest.mark.parametrize("alpha,x", [(1.775, 1), (1.5, 10)])
def test_named_oracle_points(alpha, x):
    assert rel(hurwitz_tail(alpha, x), TAIL[(alpha, x)]) < 1e-10


def test_vectorised_matches_scalar():
    xs = np.array([1, 3, 17, 250, 4096, 10**5, 10**9])
    many = hurwitz_tail_many(2.3, xs)
    for x, v in zip(xs, many):
        assert v == pytest.approx(hurwitz_tail(2.3, int(x)), rel=1e-13)


def test_tail_table_telescopes():
    t = tail_table(1.7, 500)
    k = np.arange(1, 501, dtype=float)
    np.testing.assert_allclose(t[:-1] - t[1:], k**-1.7, rtol=1e-10)
    assert t[0] == pytest.approx(riemann_zeta(1.7), rel=1e-13)


@pytest.mark.parametrize("alpha", [1.05, 1.3, 2.0, 3.7, 12.0])
def test_agrees_with_scipy(alpha):
    xs = [1, 2, 9, 123, 10**4]
    for x in xs:
        assert hurwitz_tail(alpha, x) == pytest.approx(scipy.special.zeta(alpha, x), rel=1e-12)


@settings(max_examples=200, deadline=None)
@given(alphas, positions)
def test_telescoping(alpha, x):
    lhs = hurwitz_tail(alpha, x) - hurwitz_tail(alpha, x + 1)
    assert lhs == pytest.approx(x**-alpha, rel=1e-6, abs=1e-12 * hurwitz_tail(alpha, x))


@settings(max_examples=200, deadline=None)
@given(alphas, positions)
def test_strictly_decreasing_in_x(alpha, x):
    assert hurwitz_tail(alpha, x + 1) < hurwitz_tail(alpha, x)


def test_riemann_decreasing_in_alpha():
    grid = np.linspace(1.01, 20, 300)
    vals = [riemann_zeta(a) for a in grid]
    assert all(b < a for a, b in zip(vals, vals[1:]))
    assert all(v > 1 for v in vals)


def test_domain_errors():
    for bad in (1.0, 0.5, -2):
        with pytest.raises(DomainError):
            riemann_zeta(bad)
    with pytest.raises(DomainError):
        hurwitz_tail(2, 0)
    with pytest.raises(DomainError):
        hurwitz_tail_inverse(2, 0.0)
    with pytest.raises(DomainError):
        hurwitz_tail_inverse(2, 2.0)


def test_config_validation():
    with pytest.raises(DomainError):
        ZetaEvalConfig(rel_tolerance=1e-3)
    with pytest.raises(DomainError):
        ZetaEvalConfig(max_terms=4)
    loose = ZetaEvalConfig(rel_tolerance=1e-8, max_terms=16)
    assert riemann_zeta(2, loose) == pytest.approx(math.pi**2 / 6, rel=1e-8)


class TestInverse:
    def test_at_zeta_is_one(self):
        for a in (1.2, 2, 5):
            assert hurwitz_tail_inverse(a, riemann_zeta(a)) == 1

    def test_first_step(self):
        assert hurwitz_tail_inverse(2, 0.64494) == 2

    def test_deep_target(self):
        # frozen from a linear scan of direct sums (oracles.tail_inverse_scan)
        x = hurwitz_tail_inverse(2, 1e-6)
        assert x == 1000001
        assert hurwitz_tail(2, x) <= 1e-6 < hurwitz_tail(2, x - 1)

    def test_vectorised(self):
        targets = np.array([riemann_zeta(1.5), 0.5, 1e-3, 1e-6])
        got = hurwitz_tail_inverse_many(1.5, targets)
        assert got.tolist() == [hurwitz_tail_inverse(1.5, float(t)) for t in targets]

    def test_vectorised_beyond_exact_integers(self):
        got = hurwitz_tail_inverse_many(1.5, np.array([1e-9, 1e-14]))
        assert got[0] == pytest.approx(hurwitz_tail_inverse(1.5, 1e-9), rel=1e-12)
        assert got[1] == np.iinfo(np.int64).max - 1023  # capped below 2**63

    @settings(max_examples=100, deadline=None)
    @given(alphas, st.floats(1e-12, 1.0))
    def test_smallest_satisfying(self, alpha, frac):
        target = frac * riemann_zeta(alpha)
        x = hurwitz_tail_inverse(alpha, target)
        assert hurwitz_tail(alpha, x) <= target * (1 + 1e-15)
        # Past 2**50 neighbouring tails agree to float precision.
        if 1 < x < 2**50:
            assert hurwitz_tail(alpha, x - 1) > target


def test_cache_memoises():
    zc = ZetaCache(2.5)
    assert zc.zeta == riemann_zeta(2.5)
    v = zc.tail(40)
    assert zc.tail(40) is v
    np.testing.assert_allclose(zc.tails(np.array([40, 41])), [v, hurwitz_tail(2.5, 41)], rtol=1e-15)
