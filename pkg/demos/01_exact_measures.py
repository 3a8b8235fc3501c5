"""
Exact measures of a discrete lifetime
=====================================

A six-point discrete Weibull (type II) lifetime, and a four-point pair where
an experimenter's guess q is compared with the actual law p.
"""

import math

from lifeinfo import (
    Convention,
    Measure,
    evaluate,
    paper_example2,
    paper_weibull2,
    shannon_entropy,
)
from lifeinfo.errors import ResidualAtTerminalError

w = paper_weibull2(6)
print("p    =", [round(v, 6) for v in w.p])
print("P(x) =", [round(v, 6) for v in w.cdf_values])
print("P̄(x) =", [round(v, 6) for v in w.survival_values])  # strict tail, last entry 0

# %%
# Residual and past quantities along the support. At the last point nothing
# survives, so residual quantities are undefined and shown as x.

for m in (Measure.RESIDUAL_ENTROPY, Measure.PAST_ENTROPY, Measure.MEAN_RESIDUAL, Measure.MEAN_PAST):
    row = []
    for j in range(1, w.r + 1):
        try:
            row.append(f"{evaluate(m, w, j):10.6f}")
        except ResidualAtTerminalError:
            row.append(f"{'x':>10}")
    print(f"{m.value:>18}", *row)

# %%
# The default range for residual sums starts at x_j itself, which is what the
# published tables use. The alternative starts after x_j and gives a genuine
# conditional entropy, always between 0 and log(r - j).

for j in range(1, w.r):
    inclusive = evaluate(Measure.RESIDUAL_ENTROPY, w, j)
    proper = evaluate(Measure.RESIDUAL_ENTROPY, w, j, Convention.PROPER)
    print(f"j={j}  inclusive {inclusive:9.5f}   proper {proper:7.5f}   log(r-j) {math.log(w.r - j):.5f}")

# %%
# Past entropy at the last point is the Shannon entropy.
print(evaluate(Measure.PAST_ENTROPY, w, 6), shannon_entropy(w))

# %%
# Inaccuracy of q against p splits as entropy plus Kullback-Leibler divergence.
pq = paper_example2()
K = evaluate("inaccuracy", pq)
E = shannon_entropy(pq.p)
D = evaluate("kl-divergence", pq)
print(f"K = {K:.7f}   E + D = {E + D:.7f}")
for name in ("cum-residual-inaccuracy", "cum-past-inaccuracy"):
    print(name, round(evaluate(name, pq), 7))
