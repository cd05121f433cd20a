"""Fit Zipf and MOEZipf to word frequencies in Moby Dick.

Needs data/words.txt (``python scripts/fetch_data.py``).  Without it a
synthetic sample of the same size stands in.

    python demos/03_fit_words.py
"""

from pathlib import Path

from moezipf import FrequencyTable, IngestSpec, MOEZipfParams, build_report, ingest, moezipf_sample

path = Path(__file__).resolve().parent.parent / "data" / "words.txt"
if path.exists():
    data = ingest(IngestSpec("observations", path))
else:
    print("data/words.txt missing: using a synthetic stand-in\n")
    data = FrequencyTable.from_observations(moezipf_sample(MOEZipfParams(1.944, 1.523), 18855, seed=1))

# Values >= 53 share the last chi-square cell.
report = build_report(data, threshold=53)
print(report.to_text())

zipf, mle = report.row("zipf-mle"), report.row("moezipf-mle")
print(f"chi-square drops by {100 * (1 - mle.gof.x2 / zipf.gof.x2):.2f}% going from Zipf to MOEZipf")

# The probability/mean matching fit needs E(Y), which only exists for alpha > 2.
# Truncating the mean lets alpha fall below 2; the answer depends on where it is cut.
for cutoff in (None, 7500, data.max_value):
    rep = build_report(data, 53, mean_cutoff=cutoff)
    row = rep.rows[1]
    if row.fit is None:
        print(f"mean cutoff {cutoff}: {row.error}")
    else:
        print(f"mean cutoff {cutoff}: alpha = {row.fit.alpha_hat:.4f}, beta = {row.fit.beta_hat:.4f}, "
              f"X^2 = {row.gof.x2:.2f}")
