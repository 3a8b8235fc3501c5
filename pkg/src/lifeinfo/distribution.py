"""Finite discrete lifetime distributions.

A :class:`FinitePmf` is a strictly positive probability vector on a strictly
increasing, positive support.  Nothing is renormalized: inputs that do not sum
to one within ``SUM_TOL`` are rejected.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import (
    InvalidRError,
    LengthMismatchError,
    NonPositiveProbError,
    NonPositiveSupportError,
    SumNotOneError,
    SupportMismatchError,
    UnsortedSupportError,
)

SUM_TOL = 1e-12


def _readonly(a):
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class FinitePmf:
    """Probability mass function ``probs`` on lifetimes ``support``."""

    support: tuple
    probs: tuple

    def __post_init__(self):
        support = tuple(float(x) for x in self.support)
        probs = tuple(float(p) for p in self.probs)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "probs", probs)
        _validate(support, probs)

    @property
    def r(self) -> int:
        return len(self.probs)

    @cached_property
    def x(self) -> np.ndarray:
        return _readonly(self.support)

    @cached_property
    def p(self) -> np.ndarray:
        return _readonly(self.probs)

    @cached_property
    def cdf_values(self) -> np.ndarray:
        """P(x_j) for j = 1..r."""
        return _readonly(cdf_values(self.p))

    @cached_property
    def survival_values(self) -> np.ndarray:
        """P̄(x_j) = P(X > x_j) for j = 1..r; the last entry is exactly 0."""
        return _readonly(survival_values(self.p))

    def to_dict(self) -> dict:
        return {"support": list(self.support), "probs": list(self.probs)}


@dataclass(frozen=True)
class PairedPmfs:
    """Actual distribution ``p`` and experimenter distribution ``q`` on one support."""

    p: FinitePmf
    q: FinitePmf

    def __post_init__(self):
        if self.p.support != self.q.support:
            raise SupportMismatchError(
                f"p support {list(self.p.support)} differs from q support "
                f"{list(self.q.support)}"
            )

    @property
    def r(self) -> int:
        return self.p.r

    @property
    def support(self) -> tuple:
        return self.p.support

    def to_dict(self) -> dict:
        return {"p": self.p.to_dict(), "q": self.q.to_dict()}


def _validate(support, probs, path=None):
    def at(field):
        return f"{path}.{field}" if path else field

    if len(support) != len(probs):
        raise LengthMismatchError(
            f"support has {len(support)} points but probs has {len(probs)}", at("probs")
        )
    if len(probs) < 2:
        raise LengthMismatchError(f"need r >= 2 support points, got {len(probs)}", at("support"))
    for i, x in enumerate(support):
        if not (math.isfinite(x) and x > 0):
            raise NonPositiveSupportError(f"x_{i + 1} = {x!r} must be finite and > 0", at(f"support[{i}]"))
    for i in range(1, len(support)):
        if not support[i] > support[i - 1]:
            raise UnsortedSupportError(
                f"support not strictly increasing at x_{i} = {support[i - 1]!r}, "
                f"x_{i + 1} = {support[i]!r}",
                at(f"support[{i}]"),
            )
    for i, p in enumerate(probs):
        if not (math.isfinite(p) and p > 0):
            raise NonPositiveProbError(f"p_{i + 1} = {p!r} must be > 0", at(f"probs[{i}]"))
    total = math.fsum(probs)
    if abs(total - 1.0) > SUM_TOL:
        raise SumNotOneError(f"probabilities sum to {total!r}, not 1", at("probs"))


def new_pmf(support: Sequence[float], probs: Sequence[float]) -> FinitePmf:
    """Validate and build a :class:`FinitePmf`."""
    return FinitePmf(tuple(support), tuple(probs))


def new_paired(p: FinitePmf, q: FinitePmf) -> PairedPmfs:
    return PairedPmfs(p, q)


def cdf_values(p) -> np.ndarray:
    """Cumulative sums of a cell vector; the final entry is pinned to 1."""
    c = np.cumsum(np.asarray(p, dtype=float))
    c[-1] = 1.0
    return c


def survival_values(p) -> np.ndarray:
    """Strict tail sums ``sum(p[j+1:])``; the final entry is exactly 0."""
    p = np.asarray(p, dtype=float)
    s = np.zeros_like(p)
    s[:-1] = np.cumsum(p[::-1])[::-1][1:]
    return s


def cdf_at(pmf: FinitePmf, x: float) -> float:
    """P(X <= x), a right-continuous step function."""
    k = bisect.bisect_right(pmf.support, x)
    if k == pmf.r:
        return 1.0
    return math.fsum(pmf.probs[:k])


def survival_at(pmf: FinitePmf, x: float) -> float:
    """P(X > x).  Strict inequality, so ``survival_at(pmf, x_r) == 0``."""
    k = bisect.bisect_right(pmf.support, x)
    if k == 0:
        return 1.0
    return math.fsum(pmf.probs[k:])


def paper_weibull2(r: int = 6) -> FinitePmf:
    """Discrete Weibull type II lifetime on ``1..r``.

    ``p_k = (k/r) * prod_{i<k} (1 - i/r)``.  With ``r = 6`` this gives
    ``(1/6, 5/18, 5/18, 5/27, 25/324, 5/324)``.
    """
    if not isinstance(r, (int, np.integer)) or isinstance(r, bool) or r < 2:
        raise InvalidRError(f"r must be an integer >= 2, got {r!r}")
    probs = []
    surv = 1.0
    for k in range(1, r + 1):
        probs.append(k / r * surv)
        surv *= (r - k) / r
    return FinitePmf(tuple(range(1, r + 1)), tuple(probs))


def paper_example2() -> PairedPmfs:
    """Actual ``p = (7/40, 11/20, 1/4, 1/40)`` against ``q_k = k^3/100`` on ``1..4``."""
    support = (1, 2, 3, 4)
    p = FinitePmf(support, (7 / 40, 11 / 20, 1 / 4, 1 / 40))
    q = FinitePmf(support, tuple(k**3 / 100 for k in support))
    return PairedPmfs(p, q)


def pmf_from_dict(obj, path=None) -> FinitePmf:
    """Build a pmf from ``{"support": [...], "probs": [...]}``, reporting field paths."""
    if not isinstance(obj, dict):
        raise LengthMismatchError("expected an object with 'support' and 'probs'", path)
    for key in ("support", "probs"):
        if key not in obj or not isinstance(obj[key], list):
            raise LengthMismatchError(f"missing list field '{key}'", f"{path}.{key}" if path else key)
    support = tuple(float(x) for x in obj["support"])
    probs = tuple(float(x) for x in obj["probs"])
    _validate(support, probs, path)
    return FinitePmf(support, probs)


def paired_from_dict(obj) -> PairedPmfs:
    if not isinstance(obj, dict) or "p" not in obj or "q" not in obj:
        raise LengthMismatchError("expected an object with 'p' and 'q'")
    return PairedPmfs(pmf_from_dict(obj["p"], "p"), pmf_from_dict(obj["q"], "q"))
