"""Least-squares power-law fitting in log-log space.

The model ``y = a * x**k`` is linear after taking logs,
``ln y = ln a + k ln x``, and is fitted by ordinary least squares on the
(ln x, ln y) pairs. No lower cutoff is applied; every point is fitted.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import RankedSeries
from .errors import DomainError, InsufficientDataError


@dataclass(frozen=True)
class PowerLawFit:
    prefactor_a: float
    exponent_k: float
    r_squared: float
    n_points: int

    def __call__(self, x: float) -> float:
        return eval_power_law(self, x)

    def equation(self) -> str:
        return f"{self.prefactor_a:.6g} x^{self.exponent_k:.4g}"


def _log_pairs(series: RankedSeries) -> tuple[np.ndarray, np.ndarray]:
    if len(series) < 2:
        raise InsufficientDataError(f"power-law fit needs >= 2 points, got {len(series)}")
    for x, y in series.pairs():
        if not y > 0:
            raise DomainError(f"rank {x}: value must be > 0 for a log-log fit, got {y}")
        if not x > 0:
            raise DomainError(f"abscissa must be > 0 for a log-log fit, got {x}")
    lx = np.log(np.array([float(x) for x in series.ranks]))
    ly = np.log(np.array([float(y) for y in series.values]))
    return lx, ly


def ols_line(x: np.ndarray, y: np.ndarray) -> tuple[float, float, float]:
    """Slope, intercept and r² of the least-squares line through (x, y).

    r² is 1 when y has no variance beyond rounding (the constant line fits exactly); a
    zero-variance x has no unique slope and raises.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    # math.fsum keeps the result independent of point order
    mx = math.fsum(x) / len(x)
    my = math.fsum(y) / len(y)
    dx = x - mx
    dy = y - my
    sxx = math.fsum(dx * dx)
    if sxx == 0.0:
        raise InsufficientDataError("abscissa has no spread; slope is undefined")
    slope = math.fsum(dx * dy) / sxx
    intercept = my - slope * mx
    ss_tot = math.fsum(dy * dy)
    ss_res = math.fsum((y - intercept - slope * x) ** 2)
    # variance at rounding-noise level means y is constant and the fit exact
    noise = len(y) * (64 * np.finfo(float).eps * (1.0 + float(np.max(np.abs(y))))) ** 2
    r2 = 1.0 if ss_tot <= noise else min(1.0, max(0.0, 1.0 - ss_res / ss_tot))
    return slope, intercept, r2


def fit_power_law(series: RankedSeries) -> PowerLawFit:
    lx, ly = _log_pairs(series)
    k, ln_a, r2 = ols_line(lx, ly)
    return PowerLawFit(math.exp(ln_a), k, r2, len(series))


def eval_power_law(fit: PowerLawFit, x: float) -> float:
    if not x > 0:
        raise DomainError(f"power law is evaluated at x > 0, got {x}")
    return fit.prefactor_a * float(x) ** fit.exponent_k


def residuals_log(series: RankedSeries, fit: PowerLawFit) -> list[tuple[float, float]]:
    """``ln(value) - ln(a * x**k)`` at each point."""
    lx, ly = _log_pairs(series)
    model = math.log(fit.prefactor_a) + fit.exponent_k * lx
    return [(_plain(x), float(r)) for x, r in zip(series.ranks, ly - model)]


def _plain(x):
    return int(x) if x == int(x) else float(x)
