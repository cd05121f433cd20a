"""Exact inverse-transform sampling and a chi-square check of the draws.

    python demos/02_sampling.py
"""

import numpy as np

from moezipf import MOEZipfParams, chi2_upper_tail, moezipf_pmf, moezipf_sample, moezipf_survival

params = MOEZipfParams(2.0, 0.5)
n = 10**6
draws = moezipf_sample(params, n, seed=2024)
print(f"{n} draws from {params}; largest = {draws.max()}")

p1 = moezipf_pmf(params, 1)
print(f"share of ones {np.mean(draws == 1):.5f} vs P(Y = 1) = {p1:.5f}")

# Cells 1..50 plus a pooled tail, compared against exact expected counts.
obs = np.bincount(np.minimum(draws, 51), minlength=52)[1:]
exp = n * np.append(moezipf_pmf(params, np.arange(1, 51)), moezipf_survival(params, 50))
x2 = float(np.sum((obs - exp) ** 2 / exp))
print(f"X^2 = {x2:.2f} on {len(obs) - 1} df, p = {chi2_upper_tail(len(obs) - 1, x2):.3f}")

# Same seed, same stream.
assert np.array_equal(draws[:10], moezipf_sample(params, n, seed=2024)[:10])
print("first draws:", draws[:10].tolist())
