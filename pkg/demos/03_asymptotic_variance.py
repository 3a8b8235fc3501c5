"""
Asymptotic variance and bound constants
=======================================

Each estimator's error is, to first order, a linear function of the
empirical frequencies. Propagating the multinomial covariance gives its
asymptotic variance; dropping the cross term between the cell and tail parts
gives the independence variant.
"""

import math

from lifeinfo import CovMode, McStudy, Measure, paper_weibull2, run_study, sigma_sq

w = paper_weibull2(6)

for m, j in [(Measure.RESIDUAL_ENTROPY, 1), (Measure.PAST_ENTROPY, 3), (Measure.MEAN_RESIDUAL, 1),
             (Measure.MEAN_PAST, 6), (Measure.CUM_RESIDUAL_ENTROPY, None)]:
    delta = sigma_sq(m, w, j=j, mode=CovMode.DELTA)
    indep = sigma_sq(m, w, j=j, mode=CovMode.PAPER_INDEPENDENT)
    print(f"{m.value:>22} j={j}:  A={delta.A:8.4f}  sigma^2 delta {delta.sigma_sq:8.5f}"
          f"  independent {indep.sigma_sq:8.5f}  (cross {delta.cov_term:+.5f})")

# %%
# For mean residual life the cross term is large. Compare both against
# simulation at n = 10^4.
rep = run_study(McStudy(w, "mean-residual", 10_000, 2000, 42, j=1))
print("simulated var", round(rep.empirical_variance, 5))
print("delta        ", round(sigma_sq("mean-residual", w, j=1).sigma_sq, 5))
print("independent  ", round(sigma_sq("mean-residual", w, j=1, mode="paper-independent").sigma_sq, 5))

# %%
# Two-point uniform law: a single cumulative term.
from lifeinfo import new_pmf

u = new_pmf((1, 2), (0.5, 0.5))
spec = sigma_sq("cum-residual-entropy", u)
print(spec.A, abs(1 + math.log(0.5)), spec.sigma_sq, 0.25 * (1 + math.log(0.5)) ** 2)
