"""A first look at the MOEZipf family.

Tilting a Zipf law with beta moves mass between the head and the tail while
leaving the power-law exponent of the tail untouched.

    python demos/01_distribution_tour.py
"""

import numpy as np

from moezipf import MOEZipfParams, loglog_series, moezipf_mean, moezipf_pmf, moezipf_survival

alpha = 1.8
print(f"P(Y = x) for alpha = {alpha}")
print("beta   " + "".join(f"{f'x={x}':>10}" for x in (1, 2, 3, 10, 100)))
for beta in (0.2, 0.5, 1.0, 2.0, 5.0):
    row = moezipf_pmf(MOEZipfParams(alpha, beta), np.array([1, 2, 3, 10, 100]))
    print(f"{beta:<7}" + "".join(f"{p:>10.5f}" for p in row))

# Larger beta empties x = 1 and fattens everything after it.
print("\nsurvival P(Y > 10):")
for beta in (0.2, 1.0, 5.0):
    print(f"  beta={beta:<4} {moezipf_survival(MOEZipfParams(alpha, beta), 10):.4f}")

# Far out, log P(Y = x) is a straight line of slope -alpha, shifted by log(beta).
for beta in (1.0, np.e):
    s = loglog_series(MOEZipfParams(2.5, beta), 10**4)
    print(f"\nbeta={beta:.3f}: asymptote slope {s.slope}, intercept {s.intercept:.4f}; "
          f"gap at x=1e4 {s.log_p[-1] - s.asymptote(s.log_x[-1]):.2e}")

print("\nmeans (infinite when alpha <= 2):")
for a, b in ((1.9, 2.0), (2.5, 0.5), (3.0, 2.0)):
    print(f"  E[Y | alpha={a}, beta={b}] = {moezipf_mean(MOEZipfParams(a, b))}")
