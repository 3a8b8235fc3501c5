"""Residual/past entropies, mean residual/past lifetimes and inaccuracy measures
of finite discrete lifetimes, with plug-in estimators and their asymptotics."""

from .asymptotics import AsymptoticSpec, CovMode, as_bound, sigma_sq, standardize
from .distribution import (
    FinitePmf,
    PairedPmfs,
    cdf_at,
    new_paired,
    new_pmf,
    paper_example2,
    paper_weibull2,
    survival_at,
)
from .estimators import DeviationStats, EmpiricalDist, deviation_stats, fit_empirical, plugin_measure
from .measures import (
    Convention,
    Measure,
    cum_past_entropy,
    cum_past_inaccuracy,
    cum_residual_entropy,
    cum_residual_inaccuracy,
    evaluate,
    inaccuracy,
    kl_divergence,
    mean_past,
    mean_residual,
    past_entropy,
    past_inaccuracy,
    residual_entropy,
    residual_inaccuracy,
    shannon_entropy,
)
from .montecarlo import McReport, McStudy, TraceResult, ks_statistic, run_study, run_trace, sample

__version__ = "0.1.0"
