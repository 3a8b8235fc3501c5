"""Empirical distributions and plug-in estimators."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .distribution import FinitePmf, PairedPmfs, cdf_values, survival_values
from .errors import (
    LengthMismatchError,
    MissingQError,
    SupportMismatchError,
    ValidationError,
    ValueOutsideSupportError,
)
from .measures import Convention, Measure, check_index, evaluate_cells, residual_range


@dataclass(frozen=True)
class EmpiricalDist:
    """Occurrence counts of an i.i.d. sample over a declared support."""

    support: tuple
    counts: tuple

    def __post_init__(self):
        object.__setattr__(self, "support", tuple(float(x) for x in self.support))
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.support) != len(self.counts):
            raise LengthMismatchError("support and counts differ in length", "counts")
        if any(c < 0 for c in self.counts):
            raise ValidationError("counts must be nonnegative", "counts")
        if self.n < 1:
            raise ValidationError("sample size must be >= 1", "counts")

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def r(self) -> int:
        return len(self.counts)

    @cached_property
    def pmf(self) -> np.ndarray:
        """Empirical cell frequencies p_n^(j) = count_j / n."""
        a = np.asarray(self.counts, dtype=float) / self.n
        a.setflags(write=False)
        return a

    @cached_property
    def cdf(self) -> np.ndarray:
        a = cdf_values(self.pmf)
        a.setflags(write=False)
        return a

    @cached_property
    def survival(self) -> np.ndarray:
        a = survival_values(self.pmf)
        a.setflags(write=False)
        return a

    @classmethod
    def from_counts(cls, support, counts) -> "EmpiricalDist":
        return cls(tuple(support), tuple(counts))


@dataclass(frozen=True)
class DeviationStats:
    """Sup-norm deviations between an empirical distribution and the truth.

    ``a_Rn_p`` and ``a_Pn_p`` are ``None`` when the corresponding conditional
    ratio is undefined (terminal index, or empty empirical conditioning mass).
    """

    a_n_p: float
    a_n_P: float
    a_n_Pbar: float
    a_Rn_p: Optional[float]
    a_Pn_p: Optional[float]


def fit_empirical(sample: Sequence[float], support: Sequence[float]) -> EmpiricalDist:
    """Tally a sample against ``support``; every observation must be a support point."""
    support = tuple(float(x) for x in support)
    values = np.asarray(sample, dtype=float).ravel()
    if values.size < 1:
        raise ValidationError("sample is empty", "sample")
    sup = np.asarray(support)
    idx = np.searchsorted(sup, values)
    idx_c = np.minimum(idx, sup.size - 1)
    bad = np.flatnonzero(sup[idx_c] != values)
    if bad.size:
        i = int(bad[0])
        raise ValueOutsideSupportError(
            f"observation #{i} = {values[i]!r} is not in the support {list(support)}",
            index=i,
            value=float(values[i]),
            path=f"sample[{i}]",
        )
    counts = np.bincount(idx_c, minlength=sup.size)
    return EmpiricalDist(support, tuple(int(c) for c in counts))


def plugin_measure(
    emp: EmpiricalDist,
    measure,
    j: Optional[int] = None,
    q_side=None,
    conv=Convention.PAPER,
) -> float:
    """Plug-in estimate: the exact formula evaluated on empirical frequencies.

    For inaccuracy-type measures the experimenter distribution stays exact;
    ``q_side`` may be a :class:`FinitePmf` or a :class:`PairedPmfs` (its ``q``).

    Raises
    ------
    EmptyTailError
        The empirical conditioning mass at ``j`` is zero.
    ZeroCellInRangeError
        A logarithm in the summation range would be taken of an empty cell.
    """
    m = Measure.parse(measure)
    q = None
    if q_side is not None:
        qp = q_side.q if isinstance(q_side, PairedPmfs) else q_side
        if qp.support != emp.support:
            raise SupportMismatchError("q support differs from the sample support")
        q = qp.p
    if m.paired and q is None:
        raise MissingQError(f"{m.value} needs the experimenter distribution q")
    if m.indexed:
        j = check_index(emp.r, j, m.residual)
    return evaluate_cells(m, emp.pmf, q, j if m.indexed else None, Convention(conv))


def _ratio_dev(num_hat, den_hat, num, den):
    if den_hat <= 0:
        return None
    return float(np.max(np.abs(num_hat / den_hat - num / den)))


def deviation_stats(emp: EmpiricalDist, truth: FinitePmf, j: Optional[int] = None,
                    conv=Convention.PAPER) -> DeviationStats:
    """Cell, cdf, survival and conditional-ratio sup-deviations at index ``j``."""
    if emp.support != truth.support:
        raise SupportMismatchError("empirical and true supports differ")
    r = truth.r
    a_p = float(np.max(np.abs(emp.pmf - truth.p)))
    a_P = float(np.max(np.abs(emp.cdf - truth.cdf_values)))
    a_S = float(np.max(np.abs(emp.survival[: r - 1] - truth.survival_values[: r - 1])))
    a_R = a_Pp = None
    if j is not None:
        j = check_index(r, j, residual=False)
        if j < r:
            ks = residual_range(j, r, conv)
            a_R = _ratio_dev(emp.pmf[ks.start:], emp.survival[j - 1],
                             truth.p[ks.start:], truth.survival_values[j - 1])
        a_Pp = _ratio_dev(emp.pmf[:j], emp.cdf[j - 1], truth.p[:j], truth.cdf_values[j - 1])
    return DeviationStats(a_p, a_P, a_S, a_R, a_Pp)

