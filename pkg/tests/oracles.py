"""Independent reference computations used to freeze expected values.

Nothing here touches the package: every routine is a plain direct sum.
Run ``python tests/oracles.py`` to regenerate ``frozen.py``.
"""

import math
from pathlib import Path

import numpy as np

ALPHAS = (1.1, 1.5, 2.0, 2.5, 3.0, 4.0)
XS = (1, 2, 5, 10, 100, 1000)
EXTRA = ((1.775, 1), (1.5, 10), (2.0, 2), (1.8, 2), (3.5, 1), (2.5, 1), (1.5, 1))
N_DIRECT = 10**7
CHUNK = 10**6


def direct_tail(alpha, x, n_terms=N_DIRECT):
    """sum_{k=x}^{x+n_terms-1} k**-alpha plus a two-term Euler-Maclaurin remainder.

    The remainder starts at k ~ 1e7 where its first neglected term is below
    1e-30 relative, so the value is effectively the brute-force sum.
    """
    parts = []
    for start in range(x, x + n_terms, CHUNK):
        k = np.arange(start, min(start + CHUNK, x + n_terms), dtype=float)
        parts.append(float(np.sum(k[::-1] ** -alpha)))
    a = float(x + n_terms)
    rest = a ** (1 - alpha) / (alpha - 1) + 0.5 * a**-alpha + alpha / 12 * a ** (-alpha - 1)
    parts.append(rest)
    return math.fsum(sorted(parts))


def tail_inverse_scan(alpha, target, start=1):
    """Smallest x >= start with direct_tail(alpha, x) <= target, by linear scan of
    consecutive differences (tail(x+1) = tail(x) - x**-alpha)."""
    t = direct_tail(alpha, start)
    x = start
    while t > target:
        t -= x**-alpha
        x += 1
    return x


MEANS = ((3.0, 0.5), (3.0, 2.0), (4.0, 100.0), (2.5, 0.5))


def truncated_expectation(alpha, beta, n_terms=N_DIRECT):
    """sum_{x=1}^{n_terms} x * P(Y = x), every zeta value built from direct sums."""
    z = direct_tail(alpha, 1)
    x = np.arange(1, n_terms + 1, dtype=float)
    head = np.cumsum(x**-alpha)  # H(x)
    tail_next = z - head  # zeta(alpha, x + 1)
    d = head + beta * tail_next  # denominator at x
    d_prev = np.concatenate(([beta * z], d[:-1]))
    pmf = x**-alpha * beta * z / (d_prev * d)
    return math.fsum((x * pmf).tolist())


def main():
    out = ["# Generated by tests/oracles.py -- brute-force direct sums.", "", "TAIL = {"]
    pts = [(a, x) for a in ALPHAS for x in XS] + list(EXTRA)
    for a, x in pts:
        out.append(f"    ({a!r}, {x}): {direct_tail(a, x)!r},")
    out.append("}")
    out += ["", "# sum_{x <= 1e7} x * pmf(x)", "TRUNCATED_MEAN = {"]
    for a, b in MEANS:
        out.append(f"    ({a!r}, {b!r}): {truncated_expectation(a, b)!r},")
    out.append("}")
    Path(__file__).with_name("frozen.py").write_text("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
