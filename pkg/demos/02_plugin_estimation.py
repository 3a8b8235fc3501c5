"""
Plug-in estimation from a sample
================================

Draw lifetimes, tally them against the declared support, and evaluate each
measure on the empirical frequencies.
"""

import numpy as np

from lifeinfo import Measure, deviation_stats, evaluate, fit_empirical, paper_weibull2, plugin_measure, sample
from lifeinfo.errors import ZeroCellInRangeError

w = paper_weibull2(6)
x = sample(w, 2000, seed=7)
emp = fit_empirical(x, w.support)
print("counts", emp.counts)
print("p_n   ", np.round(emp.pmf, 4))

for m, j in [(Measure.SHANNON, None), (Measure.RESIDUAL_ENTROPY, 2), (Measure.MEAN_PAST, 4),
             (Measure.CUM_RESIDUAL_ENTROPY, None)]:
    est = plugin_measure(emp, m, j)
    print(f"{m.value:>22} j={j}: estimate {est:.5f}  truth {evaluate(m, w, j):.5f}")

# %%
# Sup-deviations between empirical and true quantities drive the almost-sure
# error bounds.
print(deviation_stats(emp, w, j=2))

# %%
# Small samples can leave a cell empty; an entropy that needs its logarithm
# refuses to guess.
tiny = fit_empirical(sample(w, 15, seed=1), w.support)
print("tiny counts", tiny.counts)
try:
    plugin_measure(tiny, "shannon")
except ZeroCellInRangeError as exc:
    print("undefined:", exc)

# %%
# With counts proportional to the true law the estimate is exact.
exact = fit_empirical(np.repeat(w.x, [54, 90, 90, 60, 25, 5]), w.support)
print(plugin_measure(exact, "shannon"), evaluate("shannon", w))
