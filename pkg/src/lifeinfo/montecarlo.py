"""Seeded replication studies, convergence traces and normality diagnostics.

Randomness comes from numpy's PCG64 bit generator.  Replication ``i`` of a study
with master seed ``s`` draws from ``SeedSequence(s, spawn_key=(i,))``, so each
replication's stream depends only on ``(s, i)`` and results do not depend on
execution order.  Draws use inverse-cdf lookup of uniforms over the sorted
support.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.special import ndtr

from .asymptotics import CovMode, as_bound, bound_deviation, sigma_sq, standardize
from .distribution import FinitePmf, PairedPmfs
from .errors import AllReplicationsSkippedError, EstimationError, TooFewDrawsError
from .estimators import EmpiricalDist, deviation_stats, plugin_measure
from .measures import Convention, Measure, evaluate

KS_COEF_95 = 1.36


def rng_for(seed: int, index=0) -> np.random.Generator:
    """PCG64 stream for substream ``index`` (an int or a tuple of ints) of ``seed``."""
    key = tuple(index) if isinstance(index, tuple) else (index,)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))


def _draw_indices(pmf: FinitePmf, n: int, rng) -> np.ndarray:
    u = rng.random(n)
    idx = np.searchsorted(pmf.cdf_values, u, side="right")
    return np.minimum(idx, pmf.r - 1)


def sample(pmf: FinitePmf, n: int, seed: int, index: int = 0) -> np.ndarray:
    """``n`` i.i.d. lifetimes from ``pmf``; deterministic in ``(pmf, n, seed, index)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return pmf.x[_draw_indices(pmf, n, rng_for(seed, index))]


def sample_counts(pmf: FinitePmf, n: int, seed: int, index: int = 0) -> EmpiricalDist:
    """Same draws as :func:`sample`, tallied directly into an :class:`EmpiricalDist`."""
    idx = _draw_indices(pmf, n, rng_for(seed, index))
    return EmpiricalDist(pmf.support, tuple(np.bincount(idx, minlength=pmf.r).tolist()))


def ks_statistic(draws: Sequence[float]) -> float:
    """One-sample Kolmogorov-Smirnov distance between ``draws`` and N(0, 1)."""
    x = np.sort(np.asarray(draws, dtype=float))
    m = x.size
    if m < 2:
        raise TooFewDrawsError(f"need at least 2 draws, got {m}")
    f = ndtr(x)
    i = np.arange(1, m + 1)
    return float(max(np.max(i / m - f), np.max(f - (i - 1) / m)))


def ks_critical_95(m: int) -> float:
    return KS_COEF_95 / math.sqrt(m)


@dataclass(frozen=True)
class McStudy:
    pmf: FinitePmf
    measure: Measure
    n: int
    replications: int
    seed: int
    j: Optional[int] = None
    q: Optional[FinitePmf] = None
    cov_mode: CovMode = CovMode.DELTA
    conv: Convention = Convention.PAPER

    def __post_init__(self):
        object.__setattr__(self, "measure", Measure.parse(self.measure))
        object.__setattr__(self, "cov_mode", CovMode(self.cov_mode))
        object.__setattr__(self, "conv", Convention(self.conv))
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.replications < 2:
            raise TooFewDrawsError(f"need at least 2 replications, got {self.replications}")

    @property
    def dist(self):
        return self.pmf if self.q is None else PairedPmfs(self.pmf, self.q)


@dataclass
class McReport:
    study: McStudy
    truth: float
    sigma_sq: float
    estimates: list
    raw_errors: list
    draws: list
    skipped: int
    empirical_variance: float
    ks_stat: float

    @property
    def ks_critical_95(self) -> float:
        return ks_critical_95(len(self.draws))

    def summary(self) -> dict:
        s = self.study
        return {
            "measure": s.measure.value,
            "j": s.j,
            "n": s.n,
            "R": s.replications,
            "seed": s.seed,
            "skipped": self.skipped,
            "truth": self.truth,
            "empirical_variance": self.empirical_variance,
            "sigma_sq": self.sigma_sq,
            "ks_stat": self.ks_stat,
            "ks_critical_95": self.ks_critical_95,
        }

    def summary_json(self) -> str:
        return json.dumps(self.summary(), indent=2) + "\n"

    def draws_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["replication", "estimate", "raw_error", "draw"])
        for row in zip(self._kept, self.estimates, self.raw_errors, self.draws):
            w.writerow([row[0]] + [repr(float(v)) for v in row[1:]])
        return buf.getvalue()

    _kept: list = field(default_factory=list, repr=False)


def replicate(study: McStudy, index: int) -> Optional[float]:
    """Plug-in estimate for replication ``index``, or ``None`` if it is undefined."""
    emp = sample_counts(study.pmf, study.n, study.seed, index)
    try:
        return plugin_measure(emp, study.measure, study.j, study.q, study.conv)
    except EstimationError:
        return None


def run_study(study: McStudy, order: Optional[Sequence[int]] = None) -> McReport:
    """Run every replication and summarize the standardized errors.

    ``order`` permutes execution order (for testing); the report is always
    assembled by replication index.
    """
    truth = evaluate(study.measure, study.dist, study.j, study.conv)
    spec = sigma_sq(study.measure, study.pmf, study.q, study.j, study.cov_mode, study.conv)
    indices = range(study.replications) if order is None else order
    results = {i: replicate(study, i) for i in indices}
    kept = [i for i in range(study.replications) if results[i] is not None]
    if not kept:
        raise AllReplicationsSkippedError("every replication hit an undefined estimate")
    estimates = [results[i] for i in kept]
    root_n = math.sqrt(study.n)
    raw = [root_n * (e - truth) for e in estimates]
    draws = [standardize(e, truth, study.n, spec) for e in estimates]
    var = float(np.var(raw, ddof=1)) if len(raw) > 1 else float("nan")
    ks = ks_statistic(draws)
    return McReport(
        study=study,
        truth=truth,
        sigma_sq=spec.sigma_sq,
        estimates=estimates,
        raw_errors=raw,
        draws=draws,
        skipped=study.replications - len(kept),
        empirical_variance=var,
        ks_stat=ks,
        _kept=kept,
    )


@dataclass
class TraceResult:
    measure: Measure
    j: Optional[int]
    n_grid: list
    estimates: list  # None where the estimator is undefined
    truth: float

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "estimate", "truth"])
        for n, e in zip(self.n_grid, self.estimates):
            w.writerow([n, "" if e is None else repr(float(e)), repr(float(self.truth))])
        return buf.getvalue()


def run_trace(pmf: FinitePmf, measure, n_grid: Sequence[int], seed: int, j=None,
              q: Optional[FinitePmf] = None, conv=Convention.PAPER) -> TraceResult:
    """Estimates along one nested sample path: each larger ``n`` extends the same draws."""
    m = Measure.parse(measure)
    grid = [int(n) for n in n_grid]
    if not grid or grid[0] < 1 or any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("n_grid must be a nonempty, strictly increasing list of positive sizes")
    dist = pmf if q is None else PairedPmfs(pmf, q)
    truth = evaluate(m, dist, j, conv)
    idx = _draw_indices(pmf, grid[-1], rng_for(seed, 0))
    estimates = []
    for n in grid:
        emp = EmpiricalDist(pmf.support, tuple(np.bincount(idx[:n], minlength=pmf.r).tolist()))
        try:
            estimates.append(plugin_measure(emp, m, j, q, conv))
        except EstimationError:
            estimates.append(None)
    return TraceResult(m, j, grid, estimates, truth)


def consistency_wins(pmf, measure, j=None, q=None, seeds=50, n_small=100, n_large=100_000,
                     conv=Convention.PAPER, seed=0):
    """Count comparisons where the large-``n`` error beats the small-``n`` error.

    Comparison ``i`` draws its small sample from substream ``(i, 0)`` and its
    large sample from ``(i, 1)`` of the master ``seed``.  Comparisons whose
    estimate is undefined (empty cell) are passed over and replaced by the next
    index, so exactly ``seeds`` comparisons are made.
    Returns ``(wins, seeds, passed_over)``.
    """
    m = Measure.parse(measure)
    dist = pmf if q is None else PairedPmfs(pmf, q)
    truth = evaluate(m, dist, j, conv)
    wins = done = passed = 0
    i = 0
    while done < seeds:
        try:
            small = plugin_measure(sample_counts(pmf, n_small, seed, (i, 0)), m, j, q, conv)
            large = plugin_measure(sample_counts(pmf, n_large, seed, (i, 1)), m, j, q, conv)
        except EstimationError:
            passed += 1
        else:
            done += 1
            wins += abs(large - truth) < abs(small - truth)
        i += 1
    return wins, seeds, passed


def bound_ratios(pmf, measure, j=None, q=None, n=100_000, replications=200, seed=0,
                 conv=Convention.PAPER):
    """Ratios ``|error| / a_n`` over seeded replications, paired with the bound constant.

    A replication with zero deviation and zero error contributes ratio 0.
    Returns ``(ratios, A)``.
    """
    m = Measure.parse(measure)
    dist = pmf if q is None else PairedPmfs(pmf, q)
    truth = evaluate(m, dist, j, conv)
    A = as_bound(m, pmf, q, j, conv)
    ratios = []
    for i in range(replications):
        emp = sample_counts(pmf, n, seed, i)
        err = abs(plugin_measure(emp, m, j, q, conv) - truth)
        dev = bound_deviation(m, deviation_stats(emp, pmf, j, conv))
        if dev is None:
            ratios.append(math.inf)
        elif dev == 0:
            ratios.append(0.0 if err == 0 else math.inf)
        else:
            ratios.append(err / dev)
    return ratios, A
