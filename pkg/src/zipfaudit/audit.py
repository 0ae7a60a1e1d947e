"""Category reports, per-account P standing and the fake-follower index.

The fake-follower index is a heuristic defined by this package, not a
measured fake fraction: ``1 - min(1, p / median_p)`` within a category, so
accounts at or above the category median score 0 and an account with no
retweets scores 1.
"""
from __future__ import annotations

import statistics
from dataclasses import dataclass

from .dataset import METRICS, AccountSet, rank_metric
from .errors import DomainError, EmptyInputError, InsufficientDataError
from .powerlaw import PowerLawFit, fit_power_law
from .pratio import BIN_EDGES, BinHistogram, LogTrend, account_ratios, bin_log, log_trend_fit
from .zipf import zipf_deviation

SCHEMA_VERSION = 1
FAKE_INDEX_NOTE = (
    "fake_index = 1 - min(1, p / category median p); a heuristic ordering, "
    "not an estimate of the fraction of fake followers"
)


@dataclass(frozen=True)
class CategoryReport:
    category: str
    fits: dict[str, PowerLawFit]
    account_count: int
    zipf_max_deviation: dict[str, float]


@dataclass(frozen=True)
class AccountScore:
    account_name: str
    category: str
    p: float
    p_percentile: float
    fake_index: float


def _fit_metrics(accounts: AccountSet, label: str) -> CategoryReport:
    if len(accounts) < 2:
        raise InsufficientDataError(f"{label}: need >= 2 accounts, got {len(accounts)}")
    for record in accounts:
        for metric in METRICS:
            if not record.metric(metric) > 0:
                raise DomainError(f"{label}: account {record.name!r} has non-positive {metric}")
    fits = {}
    deviation = {}
    for metric in METRICS:
        series = rank_metric(accounts, metric)
        fits[metric] = fit_power_law(series)
        deviation[metric] = zipf_deviation(series).max_abs_relative_error
    return CategoryReport(label, fits, len(accounts), deviation)


def category_report(accounts: AccountSet, category: str) -> CategoryReport:
    return _fit_metrics(accounts.by_category(category), category)


def fake_index(p: float, median_p: float) -> float:
    if median_p <= 0:
        # nobody in the category is below a zero median
        return 0.0
    return 1.0 - min(1.0, p / median_p)


def account_scores(accounts: AccountSet, category: str) -> list[AccountScore]:
    members = accounts.by_category(category)
    if len(members) == 0:
        raise EmptyInputError(f"no accounts in category {category!r}")
    ratios = account_ratios(members)
    ps = [r.p for r in ratios]
    median_p = statistics.median(ps)
    count = len(ps)
    scores = []
    for rec in ratios:
        if count == 1:
            pct = 1.0
        else:
            pct = sum(1 for q in ps if q < rec.p) / (count - 1)
        scores.append(AccountScore(rec.account_name, category, rec.p, pct, fake_index(rec.p, median_p)))
    scores.sort(key=lambda s: (-s.p, s.account_name))
    return scores


@dataclass(frozen=True)
class FullReport:
    categories: tuple[CategoryReport, ...]
    pooled: CategoryReport
    histogram: BinHistogram
    trend: LogTrend | None
    scores: tuple[AccountScore, ...]

    def to_dict(self) -> dict:
        def fits(report: CategoryReport) -> dict:
            return {
                "category": report.category,
                "account_count": report.account_count,
                "fits": {
                    m: {"a": f.prefactor_a, "k": f.exponent_k, "r2": f.r_squared, "n_points": f.n_points}
                    for m, f in report.fits.items()
                },
                "zipf_max_deviation": dict(report.zipf_max_deviation),
            }

        h = self.histogram
        return {
            "schema_version": SCHEMA_VERSION,
            "categories": [fits(c) for c in self.categories],
            "pooled": fits(self.pooled),
            "histogram": {
                "edges": list(h.edges),
                "counts": list(h.counts),
                "underflow": h.underflow,
                "overflow": h.overflow,
                "undefined": h.undefined,
            },
            "trend": None
            if self.trend is None
            else {"slope": self.trend.slope, "intercept": self.trend.intercept, "r2": self.trend.r_squared},
            "scores": [
                {
                    "name": s.account_name,
                    "category": s.category,
                    "p": s.p,
                    "p_percentile": s.p_percentile,
                    "fake_index": s.fake_index,
                }
                for s in self.scores
            ],
            "fake_index_definition": FAKE_INDEX_NOTE,
        }


def full_report(accounts: AccountSet) -> FullReport:
    """Every category's fits and scores plus pooled fits, histogram and trend."""
    if len(accounts) == 0:
        raise EmptyInputError("cannot report on an empty account set")
    categories = accounts.categories()
    reports = tuple(category_report(accounts, c) for c in categories)
    pooled = _fit_metrics(accounts, "pooled")
    ratios = account_ratios(accounts)
    histogram = bin_log(ratios, BIN_EDGES)
    try:
        trend = log_trend_fit(ratios)
    except InsufficientDataError:
        trend = None
    scores = tuple(s for c in categories for s in account_scores(accounts, c))
    return FullReport(reports, pooled, histogram, trend, scores)


__all__ = [
    "AccountScore",
    "CategoryReport",
    "FullReport",
    "account_scores",
    "category_report",
    "fake_index",
    "full_report",
]
