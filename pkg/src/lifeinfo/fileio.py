"""Distribution and sample file formats.

Distribution files are JSON: ``{"support": [...], "probs": [...]}`` for a single
pmf and ``{"p": {...}, "q": {...}}`` for a pair.  Sample files hold one
observation per line, or JSON counts ``{"support": [...], "counts": [...]}``.
The names ``weibull6`` (alias ``example1``) and ``example2`` load the built-in
example distributions.
"""
from __future__ import annotations

import json
from pathlib import Path

from .distribution import FinitePmf, PairedPmfs, paired_from_dict, paper_example2, paper_weibull2, pmf_from_dict
from .errors import ValidationError
from .estimators import EmpiricalDist, fit_empirical

BUILTIN_PMFS = {"weibull6": lambda: paper_weibull2(6), "example1": lambda: paper_weibull2(6),
                "example2": lambda: paper_example2().p}
BUILTIN_PAIRS = {"example2": paper_example2}


def _read_json(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read file: {exc.strerror}", str(path)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON ({exc.msg} at line {exc.lineno})", str(path)) from None


def load_pmf(source) -> FinitePmf:
    if str(source) in BUILTIN_PMFS:
        return BUILTIN_PMFS[str(source)]()
    obj = _read_json(source)
    if isinstance(obj, dict) and "p" in obj and "support" not in obj:
        return paired_from_dict(obj).p
    return pmf_from_dict(obj)


def load_pair(source) -> PairedPmfs:
    if str(source) in BUILTIN_PAIRS:
        return BUILTIN_PAIRS[str(source)]()
    return paired_from_dict(_read_json(source))


def load_support(source) -> tuple:
    if str(source) in BUILTIN_PMFS:
        return BUILTIN_PMFS[str(source)]().support
    obj = _read_json(source)
    if isinstance(obj, dict):
        obj = obj.get("support", obj.get("p", {}).get("support") if isinstance(obj.get("p"), dict) else None)
    if not isinstance(obj, list) or not obj:
        raise ValidationError("expected a support list", "support")
    return tuple(float(x) for x in obj)


def load_sample(source, support=None) -> EmpiricalDist:
    """Read a sample file against ``support`` (required for the line format)."""
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read file: {exc.strerror}", str(source)) from None
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = _read_json(source)
        if "counts" not in obj or "support" not in obj:
            raise ValidationError("counts file needs 'support' and 'counts'", str(source))
        emp = EmpiricalDist(tuple(obj["support"]), tuple(obj["counts"]))
        if support is not None and tuple(float(x) for x in support) != emp.support:
            raise ValidationError("counts file support differs from the declared support", "support")
        return emp
    if support is None:
        raise ValidationError("a support (--support, --dist or --pair) is required for line samples")
    values = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise ValidationError(f"line {lineno}: not a number: {line!r}", str(source)) from None
    return fit_empirical(values, support)
