"""
Monte Carlo: normality and convergence
======================================

Replicate the plug-in estimator many times, standardize by the asymptotic
standard deviation and measure the distance to N(0, 1). Then follow one
growing sample to watch a single path converge.
"""

import numpy as np

from lifeinfo import McStudy, paper_weibull2, run_study, run_trace

w = paper_weibull2(6)

study = McStudy(w, "cum-residual-entropy", n=10_000, replications=2000, seed=42)
rep = run_study(study)
print(rep.summary_json())

draws = np.asarray(rep.draws)
print("mean %.3f  sd %.3f" % (draws.mean(), draws.std(ddof=1)))
hist, edges = np.histogram(draws, bins=np.arange(-4, 4.5, 0.5))
for h, e in zip(hist, edges):
    print(f"{e:5.1f} {'#' * (h // 10)}")

# %%
# Replications are keyed by index, so running them in any order gives the
# same report.
again = run_study(study, order=list(range(1999, -1, -1)))
print("order independent:", again.draws == rep.draws)

# %%
# Entropies of conditional laws carry an O(1/n) bias that shifts the
# standardized draws slightly left at moderate n.
for n in (1_000, 10_000, 100_000):
    r = run_study(McStudy(w, "residual-entropy", n, 2000, 42, j=1))
    print(f"n={n:>6}  mean draw {np.mean(r.draws):+.3f}  KS {r.ks_stat:.4f} (crit {r.ks_critical_95:.4f})")

# %%
# One nested sample path, n = 100, 200, ..., 30000.
trace = run_trace(w, "cum-residual-entropy", range(100, 30_001, 100), seed=42)
for n, e in list(zip(trace.n_grid, trace.estimates))[::50]:
    print(n, round(e, 5), "truth", round(trace.truth, 5))
with open("cr_trace.csv", "w") as fh:
    fh.write(trace.to_csv())
