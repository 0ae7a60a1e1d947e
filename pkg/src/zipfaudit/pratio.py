"""Retweet-to-follower ratio P, its normalization and log binning.

``P = average_retweets / total_followers`` and ``N = P * 10**6``; the binning
coordinate is ``log10(N)``. Bin edges follow the published bin-density table:
one 0.5-wide bin [0.5, 1.0) followed by 0.2-wide bins up to 4.0.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, replace
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .dataset import AccountSet
from .errors import DivisionError, DomainError, InsufficientDataError
from .powerlaw import ols_line

NORMALIZATION = 10**6
BIN_EDGES: tuple[float, ...] = (0.5,) + tuple(round(1.0 + 0.2 * i, 1) for i in range(16))
# Published bin-density counts for the paper's 70 accounts, in BIN_EDGES order.
PUBLISHED_BIN_COUNTS = (2, 4, 7, 4, 9, 3, 4, 7, 13, 6, 5, 3, 1, 1, 0, 1)


@dataclass(frozen=True)
class PRatioRecord:
    account_name: str
    p: float
    n_norm: float
    log_n: float | None
    bin_index: int | None = None


@dataclass(frozen=True)
class BinHistogram:
    edges: tuple[float, ...]
    counts: tuple[int, ...]
    underflow: int
    overflow: int
    undefined: int = 0

    def __post_init__(self) -> None:
        if any(b <= a for a, b in zip(self.edges, self.edges[1:])):
            raise DomainError("bin edges must be strictly increasing")
        if len(self.counts) != len(self.edges) - 1:
            raise DomainError("need exactly one count per bin")

    @property
    def total(self) -> int:
        return sum(self.counts) + self.underflow + self.overflow + self.undefined

    def rows(self) -> list[tuple[float, float, int]]:
        return [(lo, hi, c) for lo, hi, c in zip(self.edges, self.edges[1:], self.counts)]

    def merge(self, other: BinHistogram) -> BinHistogram:
        if self.edges != other.edges:
            raise DomainError("cannot merge histograms with different edges")
        return BinHistogram(
            self.edges,
            tuple(a + b for a, b in zip(self.counts, other.counts)),
            self.underflow + other.underflow,
            self.overflow + other.overflow,
            self.undefined + other.undefined,
        )


@dataclass(frozen=True)
class LogTrend:
    slope: float
    intercept: float
    r_squared: float
    n_points: int


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        return Fraction(x)
    return Fraction(Decimal(x)) if isinstance(x, Decimal) else Fraction(x)


def p_ratio(average_retweets, total_followers, account_name: str = "") -> PRatioRecord:
    """Compute P, N and log10(N); ``log_n`` is None when N is zero."""
    who = f" for account {account_name!r}" if account_name else ""
    if total_followers == 0:
        raise DivisionError(f"total_followers is zero{who}; P is undefined")
    if total_followers < 0 or average_retweets < 0:
        raise DomainError(f"counts must be non-negative{who}")
    exact = _as_fraction(average_retweets) / _as_fraction(total_followers)
    p = float(exact)
    log_n = _log10(exact * NORMALIZATION) if exact > 0 else None
    return PRatioRecord(account_name, p, p * NORMALIZATION, log_n)


def _log10(q: Fraction) -> float:
    # split into numerator/denominator logs so huge exact counts never overflow a float
    return math.log10(q.numerator) - math.log10(q.denominator)


def account_ratios(accounts: AccountSet) -> list[PRatioRecord]:
    return [p_ratio(r.average_retweets, r.total_followers, r.name) for r in accounts]


def bin_index(log_n: float | None, edges: Sequence[float] = BIN_EDGES) -> int | None:
    """Half-open bin [lo, hi) containing ``log_n``; the last bin is closed."""
    if log_n is None or log_n < edges[0] or log_n > edges[-1]:
        return None
    if log_n == edges[-1]:
        return len(edges) - 2
    return bisect.bisect_right(edges, log_n) - 1


def bin_log(records: Iterable[PRatioRecord], edges: Sequence[float] = BIN_EDGES) -> BinHistogram:
    counts = [0] * (len(edges) - 1)
    under = over = undefined = 0
    for rec in records:
        if rec.log_n is None:
            undefined += 1
        elif rec.log_n < edges[0]:
            under += 1
        elif rec.log_n > edges[-1]:
            over += 1
        else:
            counts[bin_index(rec.log_n, edges)] += 1
    return BinHistogram(tuple(edges), tuple(counts), under, over, undefined)


def assign_bins(records: Iterable[PRatioRecord], edges: Sequence[float] = BIN_EDGES) -> list[PRatioRecord]:
    return [replace(r, bin_index=bin_index(r.log_n, edges)) for r in records]


def log_trend_fit(records: Iterable[PRatioRecord]) -> LogTrend:
    """Least-squares line of log10(N) against rank, ranks taken by N descending."""
    defined = sorted(
        ((r.n_norm, r.log_n) for r in records if r.log_n is not None), reverse=True
    )
    if len(defined) < 2:
        raise InsufficientDataError(f"trend needs >= 2 records with defined log N, got {len(defined)}")
    ranks = np.arange(1, len(defined) + 1, dtype=float)
    slope, intercept, r2 = ols_line(ranks, [log_n for _, log_n in defined])
    return LogTrend(slope, intercept, r2, len(defined))
