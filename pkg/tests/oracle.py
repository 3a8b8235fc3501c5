"""Literal-summation reference implementations, written independently of the
package kernels: plain loops over 1-based indices with ``math.log``."""
import math


def _tail(p, j):
    return sum(p[k - 1] for k in range(j + 1, len(p) + 1))


def _head(p, j):
    return sum(p[k - 1] for k in range(1, j + 1))


def shannon(p):
    return -sum(pk * math.log(pk) for pk in p)


def residual_entropy(p, j, proper=False):
    s = _tail(p, j)
    start = j + 1 if proper else j
    return -sum(p[k - 1] / s * math.log(p[k - 1] / s) for k in range(start, len(p) + 1))


def past_entropy(p, j):
    c = _head(p, j)
    return -sum(p[k - 1] / c * math.log(p[k - 1] / c) for k in range(1, j + 1))


def cum_residual_entropy(p):
    return -sum(_tail(p, k) * math.log(_tail(p, k)) for k in range(1, len(p)))


def cum_past_entropy(p):
    total = 0.0
    for k in range(1, len(p) + 1):
        c = _head(p, k) if k < len(p) else 1.0
        total -= c * math.log(c)
    return total


def mean_residual(p, j):
    return sum(_tail(p, k) for k in range(j, len(p))) / _tail(p, j)


def mean_past(p, j):
    return sum(_head(p, k) for k in range(1, j + 1)) / _head(p, j)


def inaccuracy(p, q):
    return -sum(pk * math.log(qk) for pk, qk in zip(p, q))


def residual_inaccuracy(p, q, j, proper=False):
    s, t = _tail(p, j), _tail(q, j)
    start = j + 1 if proper else j
    return -sum(p[k - 1] / s * math.log(q[k - 1] / t) for k in range(start, len(p) + 1))


def past_inaccuracy(p, q, j):
    c, d = _head(p, j), _head(q, j)
    return -sum(p[k - 1] / c * math.log(q[k - 1] / d) for k in range(1, j + 1))


def cum_residual_inaccuracy(p, q):
    return -sum(_tail(p, k) * math.log(_tail(q, k)) for k in range(1, len(p)))


def cum_past_inaccuracy(p, q):
    total = 0.0
    for k in range(1, len(p) + 1):
        c = _head(p, k) if k < len(p) else 1.0
        d = _head(q, k) if k < len(q) else 1.0
        total -= c * math.log(d)
    return total


def kl(p, q):
    return sum(pk * math.log(pk / qk) for pk, qk in zip(p, q))


def evaluate(name, p, q=None, j=None, proper=False):
    """Dispatch by CLI measure name."""
    table = {
        "shannon": lambda: shannon(p),
        "residual-entropy": lambda: residual_entropy(p, j, proper),
        "past-entropy": lambda: past_entropy(p, j),
        "cum-residual-entropy": lambda: cum_residual_entropy(p),
        "cum-past-entropy": lambda: cum_past_entropy(p),
        "mean-residual": lambda: mean_residual(p, j),
        "mean-past": lambda: mean_past(p, j),
        "inaccuracy": lambda: inaccuracy(p, q),
        "residual-inaccuracy": lambda: residual_inaccuracy(p, q, j, proper),
        "past-inaccuracy": lambda: past_inaccuracy(p, q, j),
        "cum-residual-inaccuracy": lambda: cum_residual_inaccuracy(p, q),
        "cum-past-inaccuracy": lambda: cum_past_inaccuracy(p, q),
        "kl-divergence": lambda: kl(p, q),
    }
    return table[name]()


def compositions(total, parts):
    """All tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest
