"""Nonparametric statistics backing parameter selection.

The signed-rank test uses the exact conditional distribution (dynamic
programming over the observed midranks) for n <= 20 and the normal
approximation with tie correction above that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from statistics import median

from .errors import DomainError, EmptySample, TooFewPairs

EXACT_CUTOFF = 20
ALPHA = 0.05


def f_measure(precision: float, recall: float) -> float:
    """Harmonic mean of precision and recall; 0 when both are 0."""
    for value in (precision, recall):
        if not 0.0 <= value <= 1.0:
            raise DomainError(f"precision/recall must lie in [0, 1], got {value}")
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def _midranks(values: list[float]) -> list[float]:
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        rank = (i + j + 2) / 2.0  # ranks are 1-based
        for k in range(i, j + 1):
            ranks[order[k]] = rank
        i = j + 1
    return ranks


@dataclass(frozen=True)
class SignedRankResult:
    w_statistic: float  # W+, the positive-rank sum
    p_value: float
    reject: bool
    n: int
    exact: bool


def wilcoxon_signed_rank(a, b) -> SignedRankResult:
    """Two-sided signed-rank test on paired samples.

    Zero differences are dropped, tied magnitudes midranked.  Exact
    two-sided p (all sign assignments) for n <= 20, else the normal
    approximation with tie correction.
    """
    if len(a) != len(b):
        raise TooFewPairs("paired samples must have equal length")
    diffs = [x - y for x, y in zip(a, b) if x - y != 0]
    n = len(diffs)
    if n < 3:
        raise TooFewPairs(f"need at least 3 nonzero differences, got {n}")
    ranks = _midranks([abs(d) for d in diffs])
    w_plus = sum(r for d, r in zip(diffs, ranks) if d > 0)
    if n <= EXACT_CUTOFF:
        p = _exact_two_sided(ranks, w_plus)
        exact = True
    else:
        tie_sizes = _tie_sizes(ranks)
        mean = n * (n + 1) / 4.0
        var = n * (n + 1) * (2 * n + 1) / 24.0 - sum(t**3 - t for t in tie_sizes) / 48.0
        z = (w_plus - mean) / math.sqrt(var)
        p = math.erfc(abs(z) / math.sqrt(2.0))
        exact = False
    return SignedRankResult(w_plus, p, p < ALPHA, n, exact)


def _tie_sizes(ranks: list[float]) -> list[int]:
    counts: dict[float, int] = {}
    for r in ranks:
        counts[r] = counts.get(r, 0) + 1
    return [c for c in counts.values() if c > 1]


def _exact_two_sided(ranks: list[float], w_plus: float) -> float:
    scaled = [round(2 * r) for r in ranks]
    ways = {0: 1}
    for r in scaled:
        nxt: dict[int, int] = {}
        for s, c in ways.items():
            nxt[s] = nxt.get(s, 0) + c
            nxt[s + r] = nxt.get(s + r, 0) + c
        ways = nxt
    total = 2 ** len(ranks)
    w2 = round(2 * w_plus)
    le = sum(c for s, c in ways.items() if s <= w2)
    ge = sum(c for s, c in ways.items() if s >= w2)
    return min(1.0, 2.0 * min(le, ge) / total)


def hodges_lehmann(diffs) -> float:
    """Median of all Walsh averages (x_j + x_k) / 2 with j <= k."""
    values = list(diffs)
    if not values:
        raise EmptySample("hodges_lehmann needs at least one value")
    walsh = [
        (values[j] + values[k]) / 2.0
        for j in range(len(values))
        for k in range(j, len(values))
    ]
    return float(median(walsh))
