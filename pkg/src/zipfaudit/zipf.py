"""Zipf rank-value model: the value at rank n is the rank-1 value divided by n."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

from .dataset import RankedSeries
from .errors import DomainError, EmptyInputError, ParameterError, RangeError


@dataclass(frozen=True)
class ZipfModel:
    F: Real
    N: int

    def __post_init__(self) -> None:
        if not self.F > 0:
            raise ParameterError(f"Zipf rank-1 value must be > 0, got {self.F}")
        if isinstance(self.N, bool) or int(self.N) != self.N or self.N < 1:
            raise ParameterError(f"Zipf rank count must be a positive integer, got {self.N}")
        # floats are exact binary rationals, so F / n stays exact
        object.__setattr__(self, "F", Fraction(self.F))
        object.__setattr__(self, "N", int(self.N))


@dataclass(frozen=True)
class DeviationReport:
    per_rank: tuple[tuple[int, float, float, float], ...]
    max_abs_relative_error: float


def zipf_expected(model: ZipfModel, n: int) -> Real:
    if not 1 <= n <= model.N:
        raise RangeError(f"rank {n} outside 1..{model.N}")
    return model.F / n


def zipf_series(model: ZipfModel) -> RankedSeries:
    values = tuple(model.F / n for n in range(1, model.N + 1))
    return RankedSeries.from_values(values, metric="zipf")


def zipf_deviation(series: RankedSeries) -> DeviationReport:
    """Compare each rank with ``value(1) / n``.

    Relative error is ``(observed - expected) / expected``. Exact inputs are
    compared in rational arithmetic, so a model series deviates by exactly 0.
    """
    if len(series) == 0:
        raise EmptyInputError("cannot measure Zipf deviation of an empty series")
    for n, v in enumerate(series.values, start=1):
        if not v > 0:
            raise DomainError(f"rank {n}: value must be > 0, got {v}")
    top = series.values[0]
    rows = []
    worst = 0.0
    for n, observed in enumerate(series.values, start=1):
        expected = top / n
        rel = float((observed - expected) / expected)
        rows.append((n, float(observed), float(expected), rel))
        worst = max(worst, abs(rel))
    return DeviationReport(tuple(rows), worst)
