"""Riemann zeta and Hurwitz tail sums for real ``alpha > 1``.

Everything here works with the tail sum

    zeta(alpha, x) = sum_{k >= x} k**(-alpha),   x = 1, 2, 3, ...

which for integer ``x`` coincides with the Hurwitz zeta function.  Values are
obtained by summing a few leading terms directly and closing the series with
an Euler-Maclaurin expansion of the remainder.
"""

from dataclasses import dataclass
from math import exp, factorial, log

import numpy as np

from .errors import AccuracyError, DomainError

__all__ = [
    "ALPHA_MIN",
    "ZetaEvalConfig",
    "ZetaCache",
    "riemann_zeta",
    "hurwitz_tail",
    "hurwitz_tail_many",
    "hurwitz_tail_inverse",
    "hurwitz_tail_inverse_many",
    "tail_table",
]

# Series diverges at alpha = 1; refuse anything too close to it.
ALPHA_MIN = 1.0 + 1e-9

# B_2, B_4, ..., B_14.  The last one only sizes the truncation error.
_BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6)
_EM_COEF = tuple(b / factorial(2 * j + 2) for j, b in enumerate(_BERNOULLI))

# Largest integer carried exactly by a float64.
_EXACT_INT = 2**53


@dataclass(frozen=True)
class ZetaEvalConfig:
    """Accuracy controls for the zeta kernel.

    Attributes
    ----------
    rel_tolerance : float
        Target relative error of every returned value.
    max_terms : int
        Cap on the number of terms summed directly before the
        Euler-Maclaurin remainder takes over.
    """

    rel_tolerance: float = 1e-12
    max_terms: int = 64

    def __post_init__(self):
        if not 0 < self.rel_tolerance < 1e-6:
            raise DomainError("rel_tolerance must lie in (0, 1e-6)")
        if int(self.max_terms) != self.max_terms or self.max_terms < 16:
            raise DomainError("max_terms must be an integer >= 16")


DEFAULT_CONFIG = ZetaEvalConfig()


def _check_alpha(alpha):
    alpha = float(alpha)
    if not alpha > ALPHA_MIN or not np.isfinite(alpha):
        raise DomainError(f"alpha must exceed 1 (got {alpha!r})")
    return alpha


def _direct_terms_needed(alpha, tol):
    # Smallest start point a at which the first omitted Euler-Maclaurin term
    # (B_14) is below tol times the leading integral a**(1-alpha)/(alpha-1).
    poch = 1.0
    for i in range(13):
        poch *= alpha + i
    # Margin of 100 because the omitted term only estimates the error.
    bound = abs(_EM_COEF[-1]) * poch * (alpha - 1.0) / (0.01 * tol)
    return bound ** (1.0 / 14.0)


def _em_remainder(alpha, a):
    """Euler-Maclaurin value of sum_{k >= a} k**-alpha and its error size.

    ``a`` may be a scalar or an array of floats >= 1.
    """
    a = np.asarray(a, dtype=float)
    la = np.log(a)
    base = np.exp(-alpha * la)  # a**-alpha
    total = base * a / (alpha - 1.0) + 0.5 * base
    poch = alpha
    power = base / a
    inv_a2 = 1.0 / (a * a)
    err = None
    for j, coef in enumerate(_EM_COEF):
        term = coef * poch * power
        if j == len(_EM_COEF) - 1:
            err = np.abs(term)
            break
        total = total + term
        poch *= (alpha + 2 * j + 1) * (alpha + 2 * j + 2)
        power = power * inv_a2
    return total, err


def _tail_scalar(alpha, x, config):
    tol = config.rel_tolerance
    if x > _EXACT_INT:
        # Corrections past the leading term are below float resolution here.
        lx = log(x)
        return exp((1.0 - alpha) * lx) / (alpha - 1.0) * (1.0 + 0.5 * (alpha - 1.0) * exp(-lx))
    need = _direct_terms_needed(alpha, tol)
    n_direct = int(min(config.max_terms, max(0.0, np.ceil(need - x))))
    if n_direct:
        ks = np.arange(n_direct, dtype=float) + x
        head = float(np.sum(np.exp(-alpha * np.log(ks))[::-1]))
    else:
        head = 0.0
    rest, err = _em_remainder(alpha, float(x) + n_direct)
    total = head + float(rest)
    if float(err) > tol * total:
        raise AccuracyError(
            f"zeta({alpha}, {x}): remainder error {float(err):.3g} exceeds "
            f"tolerance with {config.max_terms} direct terms"
        )
    return total


def riemann_zeta(alpha, config=DEFAULT_CONFIG):
    """Riemann zeta function ``sum_{k >= 1} k**-alpha`` for real ``alpha > 1``."""
    alpha = _check_alpha(alpha)
    return _tail_scalar(alpha, 1, config)


def hurwitz_tail(alpha, x, config=DEFAULT_CONFIG):
    """Tail sum ``sum_{k >= x} k**-alpha`` for integer ``x >= 1``.

    Parameters
    ----------
    alpha : float
        Exponent, strictly greater than one.
    x : int
        First index of the sum.
    config : ZetaEvalConfig, optional

    Returns
    -------
    float
    """
    alpha = _check_alpha(alpha)
    if x < 1 or int(x) != x:
        raise DomainError(f"x must be a positive integer (got {x!r})")
    return _tail_scalar(alpha, int(x), config)


def hurwitz_tail_many(alpha, xs, config=DEFAULT_CONFIG):
    """Vectorised :func:`hurwitz_tail` over an array of positive integers."""
    alpha = _check_alpha(alpha)
    xs = np.asarray(xs)
    if xs.size and (xs.min() < 1 or not np.all(np.floor(xs) == xs)):
        raise DomainError("xs must hold positive integers")
    flat = xs.astype(float).ravel()
    out = np.empty_like(flat)
    tol = config.rel_tolerance
    need = _direct_terms_needed(alpha, tol)
    # Rows whose start already clears the Euler-Maclaurin threshold.
    far = flat >= need
    if far.any():
        val, err = _em_remainder(alpha, flat[far])
        out[far] = val
        if np.any(err > tol * val):
            raise AccuracyError(f"zeta({alpha}, x): remainder above tolerance")
    near = np.flatnonzero(~far)
    if near.size:
        n_direct = int(min(config.max_terms, np.ceil(need - flat[near].min())))
        offsets = np.arange(n_direct, dtype=float)
        for start in range(0, near.size, 4096):
            idx = near[start:start + 4096]
            ks = flat[idx, None] + offsets
            head = np.exp(-alpha * np.log(ks))[:, ::-1].sum(axis=1)
            val, err = _em_remainder(alpha, flat[idx] + n_direct)
            total = head + val
            if np.any(err > tol * total):
                raise AccuracyError(f"zeta({alpha}, x): remainder above tolerance")
            out[idx] = total
    return out.reshape(xs.shape)


def tail_table(alpha, k_max, config=DEFAULT_CONFIG):
    """Dense table ``t`` with ``t[k - 1] = zeta(alpha, k)`` for ``k = 1..k_max + 1``.

    Built by backward accumulation from ``zeta(alpha, k_max + 1)``, so every
    step adds positive terms and no cancellation occurs.
    """
    alpha = _check_alpha(alpha)
    k_max = int(k_max)
    if k_max < 1:
        raise DomainError("k_max must be >= 1")
    end = _tail_scalar(alpha, k_max + 1, config)
    terms = np.exp(-alpha * np.log(np.arange(1, k_max + 1, dtype=float)))
    out = np.empty(k_max + 1)
    out[-1] = end
    out[:-1] = np.cumsum(terms[::-1])[::-1] + end
    return out


class ZetaCache:
    """Memoised zeta values at one fixed ``alpha``.

    One instance belongs to one evaluation context (for example a single
    likelihood evaluation), so no locking is needed.

    Examples
    --------
    >>> zc = ZetaCache(2.0)
    >>> round(zc.zeta, 10)
    1.6449340668
    >>> round(zc.tail(2), 10)
    0.6449340668
    """

    def __init__(self, alpha, config=DEFAULT_CONFIG):
        self.alpha = _check_alpha(alpha)
        self.config = config
        self.zeta = _tail_scalar(self.alpha, 1, config)
        self._memo = {1: self.zeta}

    def tail(self, x):
        x = int(x)
        try:
            return self._memo[x]
        except KeyError:
            val = hurwitz_tail(self.alpha, x, self.config)
            self._memo[x] = val
            return val

    def tails(self, xs):
        """Tail sums at every entry of the integer array ``xs``."""
        xs = np.asarray(xs, dtype=np.int64)
        uniq, inverse = np.unique(xs, return_inverse=True)
        missing = [u for u in uniq.tolist() if u not in self._memo]
        if missing:
            vals = hurwitz_tail_many(self.alpha, np.array(missing), self.config)
            self._memo.update(zip(missing, vals.tolist()))
        got = np.fromiter((self._memo[u] for u in uniq.tolist()), float, uniq.size)
        return got[inverse].reshape(xs.shape)


def hurwitz_tail_inverse(alpha, target, config=DEFAULT_CONFIG):
    """Smallest integer ``x >= 1`` with ``zeta(alpha, x) <= target``.

    Exponential doubling brackets the answer, bisection pins it down.

    Raises
    ------
    DomainError
        If ``target <= 0`` or ``target > zeta(alpha)``.
    """
    alpha = _check_alpha(alpha)
    target = float(target)
    z = _tail_scalar(alpha, 1, config)
    if not target > 0 or target > z:
        raise DomainError(f"target must lie in (0, zeta(alpha)] (got {target!r})")
    if target >= z:
        return 1
    lo, hi = 1, 2
    while _tail_scalar(alpha, hi, config) > target:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _tail_scalar(alpha, mid, config) > target:
            lo = mid
        else:
            hi = mid
    return hi


def hurwitz_tail_inverse_many(alpha, targets, config=DEFAULT_CONFIG, table_size=1 << 16):
    """Vectorised :func:`hurwitz_tail_inverse`.

    Targets resolved inside ``1..table_size`` use a dense table and a binary
    search; smaller targets fall through to a vectorised doubling/bisection.
    Answers beyond 2**53 cannot be located exactly in float64 and come from
    the leading-order continuous inversion instead.

    Returns
    -------
    numpy.ndarray of int64
    """
    alpha = _check_alpha(alpha)
    targets = np.asarray(targets, dtype=float)
    flat = targets.ravel()
    if flat.size == 0:
        return np.zeros(targets.shape, dtype=np.int64)
    table = tail_table(alpha, table_size, config)
    z = _tail_scalar(alpha, 1, config)
    if not np.all(flat > 0) or np.any(flat > z):
        raise DomainError("targets must lie in (0, zeta(alpha)]")
    # table[0] and z may differ in the last bit; z is the reference value.
    table[0] = z
    out = np.searchsorted(-table, -flat, side="left").astype(np.int64) + 1
    deep = np.flatnonzero(flat < table[-1])
    if deep.size:
        out[deep] = _inverse_deep(alpha, flat[deep], table_size + 1, config)
    return out.reshape(targets.shape)


def _inverse_deep(alpha, t, lo_start, config):
    # Invariant: tail(lo) > t >= tail(hi).
    lo = np.full(t.size, float(lo_start))
    guess = np.exp(-np.log((alpha - 1.0) * t) / (alpha - 1.0))
    hi = np.maximum(np.ceil(guess), lo + 1.0)
    result = np.empty(t.size, dtype=np.int64)
    huge = hi > _EXACT_INT
    cap = np.nextafter(2.0**63, 0.0)
    if huge.any():
        # Beyond exact-integer range use zeta(alpha, x) ~ x**(1-alpha)/(alpha-1).
        result[huge] = np.minimum(guess[huge], cap).astype(np.int64)
    todo = np.flatnonzero(~huge)
    if todo.size == 0:
        return result
    lo, hi, tt = lo[todo], hi[todo], t[todo]
    for _ in range(64):
        above = hurwitz_tail_many(alpha, hi, config) > tt
        if not above.any():
            break
        lo = np.where(above, hi, lo)
        hi = np.where(above, np.minimum(hi * 2.0, _EXACT_INT), hi)
    while True:
        gap = hi - lo > 1
        if not gap.any():
            break
        mid = np.floor((lo + hi) / 2.0)
        mid = np.where(gap, mid, hi)
        above = hurwitz_tail_many(alpha, mid, config) > tt
        lo = np.where(gap & above, mid, lo)
        hi = np.where(gap & ~above, mid, hi)
    result[todo] = hi.astype(np.int64)
    return result


def log_zeta(alpha, config=DEFAULT_CONFIG):
    """``log(riemann_zeta(alpha))``."""
    return log(riemann_zeta(alpha, config))
