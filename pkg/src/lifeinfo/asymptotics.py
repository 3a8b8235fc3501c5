"""Almost-sure bound constants and asymptotic variances of the plug-in estimators.

Every estimator is a smooth function of the empirical cell vector, so its
first-order error is ``g · (p_n - p)`` for a coefficient vector ``g`` in cell
space.  ``g`` splits as ``g1 + g2``: ``g1`` collects the terms where empirical
frequencies enter directly (the T1 component) and ``g2`` the terms entering
through the empirical conditioning mass P̄_n(x_j) or P_n(x_j) (the T2
component).  With the multinomial covariance ``M = diag(p) - p p^T``

    sigma1_sq = g1' M g1,   sigma2_sq = g2' M g2,   cov_term = 2 g1' M g2,

and ``sigma_sq = sigma1_sq + sigma2_sq + cov_term``.  For the conditional
entropies and inaccuracies, ``sigma1_sq`` and ``sigma2_sq`` are evaluated from
their closed forms (cross-pair sums over unordered pairs, doubled); the
quadratic forms are kept as an internal consistency route.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .distribution import FinitePmf, PairedPmfs
from .errors import MissingQError, NegativeVarianceError, ZeroVarianceError
from .measures import Convention, Measure, check_index, residual_range


class CovMode(enum.Enum):
    PAPER_INDEPENDENT = "paper-independent"
    DELTA = "delta"


def psi(x):
    """psi(x) = x log x."""
    return x * np.log(x)


def psi_prime(x):
    return 1.0 + np.log(x)


def psi_second(x):
    return 1.0 / x


@dataclass(frozen=True)
class AsymptoticSpec:
    measure: Measure
    j: Optional[int]
    A: float
    sigma_sq: float
    sigma1_sq: float
    sigma2_sq: float
    cov_term: float
    cov_mode: CovMode

    def to_dict(self) -> dict:
        return {
            "measure": self.measure.value,
            "j": self.j,
            "A": self.A,
            "sigma_sq": self.sigma_sq,
            "sigma1_sq": self.sigma1_sq,
            "sigma2_sq": self.sigma2_sq,
            "cov_term": self.cov_term,
            "cov_mode": self.cov_mode.value,
        }


def multinomial_cov(p) -> np.ndarray:
    """Covariance of one multinomial draw's cell indicators: diag(p) - p p'."""
    p = np.asarray(p, dtype=float)
    return np.diag(p) - np.outer(p, p)


def _unpack(measure, p, q, j):
    m = Measure.parse(measure)
    if isinstance(p, PairedPmfs):
        p, q = p.p, p.q
    if m.paired and q is None:
        raise MissingQError(f"{m.value} needs the experimenter distribution q")
    if m.indexed:
        j = check_index(p.r, j, m.residual)
    else:
        j = None
    return m, p, q, j


def _conditional_setup(m, p: FinitePmf, q, j, conv):
    """Cells in range, conditioning mass and per-cell coefficients c_k.

    The estimator is ``-sum_k (p_k / mass) * c_k`` to first order, with
    ``c_k = psi'(p_k/mass)`` for entropies and ``log(q_k / Q-mass)`` for
    inaccuracies.  Returns ``(idx, mass, coef, mask)`` where ``mask`` marks the
    cells whose sum is ``mass``.
    """
    r = p.r
    pv = p.p
    mask = np.zeros(r, dtype=bool)
    if m in (Measure.RESIDUAL_ENTROPY, Measure.RESIDUAL_INACCURACY):
        idx = np.arange(residual_range(j, r, conv).start, r)
        mass = p.survival_values[j - 1]
        mask[j:] = True
        if m is Measure.RESIDUAL_INACCURACY:
            coef = np.log(q.p[idx] / q.survival_values[j - 1])
        else:
            coef = psi_prime(pv[idx] / mass)
    else:
        idx = np.arange(0, j)
        mass = p.cdf_values[j - 1]
        mask[:j] = True
        if m is Measure.PAST_INACCURACY:
            coef = np.log(q.p[idx] / q.cdf_values[j - 1])
        else:
            coef = psi_prime(pv[idx] / mass)
    return idx, mass, coef, mask


def _printed_components(pk, mass, coef):
    """Closed-form sigma1^2 and sigma2^2 of a conditional entropy/inaccuracy."""
    diag = float(np.sum(pk * (1.0 - pk) * coef**2))
    cross = 0.0
    for a in range(len(pk)):
        for b in range(a + 1, len(pk)):
            cross += pk[a] * pk[b] * coef[a] * coef[b]
    s1 = (diag - 2.0 * cross) / mass**2
    s2 = (1.0 - mass) / mass**3 * float(np.sum(pk * coef)) ** 2
    return s1, s2


def linearization(measure, p, q=None, j=None, conv=Convention.PAPER):
    """Cell-space coefficient vectors ``(g1, g2)`` of the estimator's first-order error."""
    m, p, q, j = _unpack(measure, p, q, j)
    conv = Convention(conv)
    r = p.r
    pv = p.p
    g1 = np.zeros(r)
    g2 = np.zeros(r)

    if m in (Measure.RESIDUAL_ENTROPY, Measure.PAST_ENTROPY,
             Measure.RESIDUAL_INACCURACY, Measure.PAST_INACCURACY):
        idx, mass, coef, mask = _conditional_setup(m, p, q, j, conv)
        g1[idx] = -coef / mass
        g2[mask] = float(np.sum(pv[idx] * coef)) / mass**2
    elif m is Measure.MEAN_RESIDUAL:
        s = p.survival_values
        mass = s[j - 1]
        i = np.arange(r)
        g1 = np.maximum(0, np.minimum(i, r - 1) - j + 1) / mass
        g2[j:] = -float(np.sum(s[j - 1 : r - 1])) / mass**2
    elif m is Measure.MEAN_PAST:
        c = p.cdf_values
        mass = c[j - 1]
        i = np.arange(r)
        g1 = np.where(i < j, j - i, 0) / mass
        g2[:j] = -float(np.sum(c[:j])) / mass**2
    elif m is Measure.CUM_RESIDUAL_ENTROPY:
        g1[1:] = -np.cumsum(psi_prime(p.survival_values[: r - 1]))
    elif m is Measure.CUM_PAST_ENTROPY:
        g1 = -np.cumsum(psi_prime(p.cdf_values)[::-1])[::-1]
    elif m is Measure.CUM_RESIDUAL_INACCURACY:
        g1[1:] = -np.cumsum(np.log(q.survival_values[: r - 1]))
    elif m is Measure.CUM_PAST_INACCURACY:
        g1 = -np.cumsum(np.log(q.cdf_values)[::-1])[::-1]
    elif m is Measure.SHANNON:
        g1 = -psi_prime(pv)
    elif m is Measure.INACCURACY:
        g1 = -np.log(q.p)
    elif m is Measure.KL_DIVERGENCE:
        g1 = 1.0 + np.log(pv / q.p)
    return np.asarray(g1, dtype=float), np.asarray(g2, dtype=float)


def as_bound(measure, p, q=None, j=None, conv=Convention.PAPER) -> float:
    """Constant A in ``limsup |estimate - truth| / a_n <= A`` (a.s.).

    The matching deviation ``a_n`` for each measure is given by
    :func:`bound_deviation`.
    """
    m, p, q, j = _unpack(measure, p, q, j)
    conv = Convention(conv)
    r = p.r
    if m in (Measure.RESIDUAL_ENTROPY, Measure.PAST_ENTROPY):
        idx, mass, coef, _ = _conditional_setup(m, p, q, j, conv)
        return float(np.sum(np.abs(coef)) / mass)
    if m in (Measure.RESIDUAL_INACCURACY, Measure.PAST_INACCURACY):
        _, _, coef, _ = _conditional_setup(m, p, q, j, conv)
        return float(np.sum(np.abs(coef)))
    if m is Measure.CUM_RESIDUAL_ENTROPY:
        return float(np.sum(np.abs(psi_prime(p.survival_values[: r - 1]))))
    if m is Measure.CUM_PAST_ENTROPY:
        return float(np.sum(np.abs(psi_prime(p.cdf_values))))
    if m is Measure.MEAN_RESIDUAL:
        s = p.survival_values
        return float((r - j) / s[j - 1] + np.sum(s[j - 1 : r - 1]) / s[j - 1] ** 2)
    if m is Measure.MEAN_PAST:
        c = p.cdf_values
        return float(j / c[j - 1] + np.sum(c[:j]) / c[j - 1] ** 2)
    if m is Measure.CUM_RESIDUAL_INACCURACY:
        return float(np.sum(np.abs(np.log(q.survival_values[: r - 1]))))
    if m is Measure.CUM_PAST_INACCURACY:
        return float(np.sum(np.abs(np.log(q.cdf_values))))
    if m is Measure.SHANNON:
        return float(np.sum(np.abs(psi_prime(p.p))))
    if m is Measure.INACCURACY:
        return float(np.sum(np.abs(np.log(q.p))))
    return float(np.sum(np.abs(1.0 + np.log(p.p / q.p))))


def bound_deviation(measure, stats) -> Optional[float]:
    """The sup-deviation from :class:`DeviationStats` that pairs with ``as_bound``."""
    m = Measure.parse(measure)
    if m in (Measure.RESIDUAL_ENTROPY, Measure.RESIDUAL_INACCURACY):
        return stats.a_Rn_p
    if m in (Measure.PAST_ENTROPY, Measure.PAST_INACCURACY):
        return stats.a_Pn_p
    if m in (Measure.CUM_RESIDUAL_ENTROPY, Measure.CUM_RESIDUAL_INACCURACY, Measure.MEAN_RESIDUAL):
        return stats.a_n_Pbar
    if m in (Measure.CUM_PAST_ENTROPY, Measure.CUM_PAST_INACCURACY, Measure.MEAN_PAST):
        return stats.a_n_P
    return stats.a_n_p


def sigma_sq(measure, p, q=None, j=None, mode=CovMode.DELTA, conv=Convention.PAPER) -> AsymptoticSpec:
    """Asymptotic variance of ``sqrt(n) * (estimate - truth)``.

    Under ``CovMode.PAPER_INDEPENDENT`` the T1/T2 cross term is dropped; the
    result may then understate (or, in principle, be negative) and is reported
    as computed.  Single-block estimators (cumulative measures, Shannon,
    inaccuracy, KL) have ``sigma2_sq = cov_term = 0`` and agree across modes.
    """
    m, p, q, j = _unpack(measure, p, q, j)
    conv = Convention(conv)
    mode = CovMode(mode)
    g1, g2 = linearization(m, p, q, j, conv)
    cov = multinomial_cov(p.p)

    if m in (Measure.RESIDUAL_ENTROPY, Measure.PAST_ENTROPY,
             Measure.RESIDUAL_INACCURACY, Measure.PAST_INACCURACY):
        idx, mass, coef, _ = _conditional_setup(m, p, q, j, conv)
        s1, s2 = _printed_components(p.p[idx], mass, coef)
    elif m is Measure.MEAN_RESIDUAL:
        s = p.survival_values
        s1 = float(g1 @ cov @ g1)
        s2 = (1.0 - s[j - 1]) / s[j - 1] ** 3 * float(np.sum(s[j - 1 : p.r - 1])) ** 2
    elif m is Measure.MEAN_PAST:
        c = p.cdf_values
        s1 = float(g1 @ cov @ g1)
        s2 = (1.0 - c[j - 1]) / c[j - 1] ** 3 * float(np.sum(c[:j])) ** 2
    else:
        s1, s2 = float(g1 @ cov @ g1), 0.0

    cross = 2.0 * float(g1 @ cov @ g2) if mode is CovMode.DELTA else 0.0
    total = s1 + s2 + cross
    if total < 0:
        # only a rounding-level negative is tolerated under the delta method
        if mode is CovMode.DELTA and total > -1e-12:
            total = 0.0
        else:
            raise NegativeVarianceError(f"{m.value}: computed variance {total!r} < 0")
    A = as_bound(m, p, q, j, conv)
    return AsymptoticSpec(m, j, A, float(total), float(s1), float(s2), float(cross), mode)


def standardize(estimate: float, truth: float, n: int, spec) -> float:
    """``sqrt(n) * (estimate - truth) / sigma``; asymptotically N(0, 1)."""
    var = spec.sigma_sq if isinstance(spec, AsymptoticSpec) else float(spec)
    if not var > 0:
        raise ZeroVarianceError("asymptotic variance is zero; cannot standardize")
    return math.sqrt(n) * (estimate - truth) / math.sqrt(var)
