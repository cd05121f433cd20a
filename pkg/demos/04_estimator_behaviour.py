"""How well do the two estimators recover known parameters?

Repeated samples from MOEZipf(2.5, 0.5) are fitted by maximum likelihood and
by matching P(Y = 1) and E(Y).

    python demos/04_estimator_behaviour.py
"""

import numpy as np

from moezipf import FrequencyTable, MOEZipfParams, fit_moezipf_mle, fit_moezipf_moments, moezipf_sample

truth = MOEZipfParams(2.5, 0.5)
mle, mom = [], []
for seed in range(10):
    data = FrequencyTable.from_observations(moezipf_sample(truth, 10**5, seed=seed))
    a = fit_moezipf_mle(data)
    b = fit_moezipf_moments(data)
    mle.append((a.alpha_hat, a.beta_hat))
    mom.append((b.alpha_hat, b.beta_hat))

for name, est in (("m.l.e.", np.array(mle)), ("moments", np.array(mom))):
    bias = est.mean(axis=0) - (truth.alpha, truth.beta)
    spread = est.std(axis=0, ddof=1)
    print(f"{name:8} bias (alpha, beta) = ({bias[0]:+.4f}, {bias[1]:+.4f})   "
          f"sd = ({spread[0]:.4f}, {spread[1]:.4f})")
# Matching a heavy-tailed sample mean is noisy; the likelihood uses every value.
