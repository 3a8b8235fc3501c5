"""Exact information and lifetime measures of a finite discrete lifetime.

All values are in nats.  Every public function validates its inputs and then
delegates to an array kernel (:func:`evaluate_cells`) that the plug-in
estimators reuse unchanged, so exact and empirical evaluations share one
arithmetic path.

Residual-type sums start at ``k = j`` under :attr:`Convention.PAPER` (the
summation range as usually printed, which reproduces the published tables) and
at ``k = j + 1`` under :attr:`Convention.PROPER`, where the weights
``p_k / P̄(x_j)`` form a genuine conditional distribution.
"""
from __future__ import annotations

import enum

import numpy as np

from .distribution import FinitePmf, PairedPmfs, cdf_values, survival_values
from .errors import (
    EmptyTailError,
    InvalidIndexError,
    MissingQError,
    ResidualAtTerminalError,
    ZeroCellInRangeError,
)


class Convention(enum.Enum):
    PAPER = "paper"
    PROPER = "proper"


class Measure(enum.Enum):
    SHANNON = "shannon"
    RESIDUAL_ENTROPY = "residual-entropy"
    PAST_ENTROPY = "past-entropy"
    CUM_RESIDUAL_ENTROPY = "cum-residual-entropy"
    CUM_PAST_ENTROPY = "cum-past-entropy"
    MEAN_RESIDUAL = "mean-residual"
    MEAN_PAST = "mean-past"
    INACCURACY = "inaccuracy"
    RESIDUAL_INACCURACY = "residual-inaccuracy"
    PAST_INACCURACY = "past-inaccuracy"
    CUM_RESIDUAL_INACCURACY = "cum-residual-inaccuracy"
    CUM_PAST_INACCURACY = "cum-past-inaccuracy"
    KL_DIVERGENCE = "kl-divergence"

    @property
    def indexed(self) -> bool:
        return self in _INDEXED

    @property
    def residual(self) -> bool:
        return self in _RESIDUAL

    @property
    def paired(self) -> bool:
        return self in _PAIRED

    @classmethod
    def parse(cls, name) -> "Measure":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().lower().replace("_", "-"))
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown measure {name!r}; valid names: {valid}") from None


_RESIDUAL = {Measure.RESIDUAL_ENTROPY, Measure.MEAN_RESIDUAL, Measure.RESIDUAL_INACCURACY}
_INDEXED = _RESIDUAL | {Measure.PAST_ENTROPY, Measure.MEAN_PAST, Measure.PAST_INACCURACY}
_PAIRED = {
    Measure.INACCURACY,
    Measure.RESIDUAL_INACCURACY,
    Measure.PAST_INACCURACY,
    Measure.CUM_RESIDUAL_INACCURACY,
    Measure.CUM_PAST_INACCURACY,
    Measure.KL_DIVERGENCE,
}


def check_index(r: int, j, residual: bool) -> int:
    """Validate a 1-based time index; residual quantities exclude ``j = r``."""
    if isinstance(j, bool) or not isinstance(j, (int, np.integer)):
        raise InvalidIndexError(f"time index j must be an integer, got {j!r}")
    if not 1 <= j <= r:
        raise InvalidIndexError(f"time index j={j} outside [1, {r}]")
    if residual and j == r:
        raise ResidualAtTerminalError(f"residual quantity undefined at j=r={r} (P̄(x_r) = 0)")
    return int(j)


def residual_range(j: int, r: int, conv: Convention) -> range:
    """0-based cell indices summed by residual-type quantities at 1-based ``j``."""
    start = j - 1 if Convention(conv) is Convention.PAPER else j
    return range(start, r)


# ---------------------------------------------------------------------------
# array kernels


def _neg_xlogx(w):
    if np.any(w <= 0):
        raise ZeroCellInRangeError("empty cell inside an entropy summation range")
    return 0.0 - float(np.sum(w * np.log(w)))


def _weighted_neg_log(w, v):
    # v holds the known-positive log arguments from the q side
    return 0.0 - float(np.sum(w * np.log(v)))


def _cond_mass(mass, what):
    if mass <= 0:
        raise EmptyTailError(f"{what} is zero; conditional quantity undefined")
    return mass


def evaluate_cells(measure: Measure, p, q=None, j=None, conv=Convention.PAPER) -> float:
    """Evaluate ``measure`` on raw cell vectors.

    ``p`` may contain zeros (empirical frequencies); ``q`` must satisfy the
    positivity assumption.  Index validation is the caller's job.
    """
    p = np.asarray(p, dtype=float)
    r = p.size
    m = measure

    if m is Measure.SHANNON:
        return _neg_xlogx(p)
    if m is Measure.RESIDUAL_ENTROPY:
        s = _cond_mass(survival_values(p)[j - 1], "P̄(x_j)")
        ks = residual_range(j, r, conv)
        return _neg_xlogx(p[ks.start:] / s)
    if m is Measure.PAST_ENTROPY:
        c = _cond_mass(cdf_values(p)[j - 1], "P(x_j)")
        return _neg_xlogx(p[:j] / c)
    if m is Measure.CUM_RESIDUAL_ENTROPY:
        return _neg_xlogx(survival_values(p)[: r - 1])
    if m is Measure.CUM_PAST_ENTROPY:
        return _neg_xlogx(cdf_values(p))
    if m is Measure.MEAN_RESIDUAL:
        s = survival_values(p)
        _cond_mass(s[j - 1], "P̄(x_j)")
        return float(np.sum(s[j - 1 : r - 1]) / s[j - 1])
    if m is Measure.MEAN_PAST:
        c = cdf_values(p)
        _cond_mass(c[j - 1], "P(x_j)")
        return float(np.sum(c[:j]) / c[j - 1])

    if q is None:
        raise MissingQError(f"{m.value} needs the experimenter distribution q")
    q = np.asarray(q, dtype=float)

    if m is Measure.INACCURACY:
        return _weighted_neg_log(p, q)
    if m is Measure.RESIDUAL_INACCURACY:
        s = _cond_mass(survival_values(p)[j - 1], "P̄(x_j)")
        qs = survival_values(q)[j - 1]
        start = residual_range(j, r, conv).start
        return _weighted_neg_log(p[start:] / s, q[start:] / qs)
    if m is Measure.PAST_INACCURACY:
        c = _cond_mass(cdf_values(p)[j - 1], "P(x_j)")
        qc = cdf_values(q)[j - 1]
        return _weighted_neg_log(p[:j] / c, q[:j] / qc)
    if m is Measure.CUM_RESIDUAL_INACCURACY:
        return _weighted_neg_log(survival_values(p)[: r - 1], survival_values(q)[: r - 1])
    if m is Measure.CUM_PAST_INACCURACY:
        return _weighted_neg_log(cdf_values(p), cdf_values(q))
    if m is Measure.KL_DIVERGENCE:
        if np.any(p <= 0):
            raise ZeroCellInRangeError("empty cell in Kullback-Leibler sum")
        return float(np.sum(p * np.log(p / q)))
    raise ValueError(f"unhandled measure {m}")  # pragma: no cover


# ---------------------------------------------------------------------------
# validated public API


def evaluate(measure, dist, j=None, conv=Convention.PAPER) -> float:
    """Evaluate any measure on a :class:`FinitePmf` or :class:`PairedPmfs`."""
    m = Measure.parse(measure)
    if isinstance(dist, PairedPmfs):
        p, q = dist.p, dist.q
    else:
        p, q = dist, None
    if m.paired and q is None:
        raise MissingQError(f"{m.value} needs a paired (p, q) distribution")
    if m.indexed:
        j = check_index(p.r, j, m.residual)
    else:
        j = None
    return evaluate_cells(m, p.p, None if q is None else q.p, j, Convention(conv))


def shannon_entropy(p: FinitePmf) -> float:
    return evaluate(Measure.SHANNON, p)


def residual_entropy(p: FinitePmf, j: int, conv=Convention.PAPER) -> float:
    """Entropy of the remaining lifetime given survival past ``x_j``."""
    return evaluate(Measure.RESIDUAL_ENTROPY, p, j, conv)


def past_entropy(p: FinitePmf, j: int) -> float:
    return evaluate(Measure.PAST_ENTROPY, p, j)


def cum_residual_entropy(p: FinitePmf) -> float:
    return evaluate(Measure.CUM_RESIDUAL_ENTROPY, p)


def cum_past_entropy(p: FinitePmf) -> float:
    return evaluate(Measure.CUM_PAST_ENTROPY, p)


def mean_residual(p: FinitePmf, j: int) -> float:
    return evaluate(Measure.MEAN_RESIDUAL, p, j)


def mean_past(p: FinitePmf, j: int) -> float:
    return evaluate(Measure.MEAN_PAST, p, j)


def inaccuracy(pq: PairedPmfs) -> float:
    return evaluate(Measure.INACCURACY, pq)


def residual_inaccuracy(pq: PairedPmfs, j: int, conv=Convention.PAPER) -> float:
    return evaluate(Measure.RESIDUAL_INACCURACY, pq, j, conv)


def past_inaccuracy(pq: PairedPmfs, j: int) -> float:
    return evaluate(Measure.PAST_INACCURACY, pq, j)


def cum_residual_inaccuracy(pq: PairedPmfs) -> float:
    return evaluate(Measure.CUM_RESIDUAL_INACCURACY, pq)


def cum_past_inaccuracy(pq: PairedPmfs) -> float:
    return evaluate(Measure.CUM_PAST_INACCURACY, pq)


def kl_divergence(pq: PairedPmfs) -> float:
    """Kullback-Leibler discrimination ``sum p log(p/q)``; equals inaccuracy minus entropy."""
    return evaluate(Measure.KL_DIVERGENCE, pq)
