import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import power_law_oracle
from zipfaudit import PowerLawFit, RankedSeries, eval_power_law, fit_power_law, rank_metric, residuals_log
from zipfaudit.errors import DomainError, InsufficientDataError

# Frozen from oracles.power_law_oracle on the table columns (40-digit OLS).
POLITICIAN_FOLLOWERS = (91834080.8627568, -2.2651888274652, 0.939191304649726)
SPORTSMEN_TWEETS = (122601.648950794, -2.44308073363804, 0.977221209784749)


def test_oracle_matches_frozen(politicians, sportsmen):
    cols = [str(v) for v in rank_metric(politicians, "total_followers").values]
    assert power_law_oracle(cols) == pytest.approx(POLITICIAN_FOLLOWERS, rel=1e-13)
    cols = [str(v) for v in rank_metric(sportsmen, "total_tweets").values]
    assert power_law_oracle(cols) == pytest.approx(SPORTSMEN_TWEETS, rel=1e-13)


@pytest.mark.parametrize(
    "fixture, metric, frozen",
    [("politicians", "total_followers", POLITICIAN_FOLLOWERS), ("sportsmen", "total_tweets", SPORTSMEN_TWEETS)],
)
def test_fit_tables(request, fixture, metric, frozen):
    fit = fit_power_law(rank_metric(request.getfixturevalue(fixture), metric))
    a, k, r2 = frozen
    assert fit.prefactor_a == pytest.approx(a, rel=1e-11)
    assert fit.exponent_k == pytest.approx(k, abs=1e-12)
    assert fit.r_squared == pytest.approx(r2, abs=1e-12)
    assert fit.n_points == 9


def test_fit_politician_followers_rounded(politicians):
    fit = fit_power_law(rank_metric(politicians, "total_followers"))
    assert round(fit.exponent_k, 3) == -2.265


def test_fit_exact_power():
    fit = fit_power_law(RankedSeries((1, 2, 4), (5, 1.25, 0.3125)))
    assert fit.prefactor_a == pytest.approx(5, rel=1e-14)
    assert fit.exponent_k == pytest.approx(-2, abs=1e-14)
    assert fit.r_squared == 1.0


def test_fit_errors():
    with pytest.raises(InsufficientDataError):
        fit_power_law(RankedSeries.from_values([3]))
    with pytest.raises(DomainError, match="rank 2"):
        fit_power_law(RankedSeries.from_values([3, 0, 1]))


def test_eval():
    fit = PowerLawFit(5, -2, 1.0, 3)
    assert eval_power_law(fit, 1) == 5
    assert eval_power_law(fit, 2) == 1.25
    # 9e6 * 2**-2.262 by 40-digit mpmath
    assert eval_power_law(PowerLawFit(9e6, -2.262, 1.0, 2), 2) == pytest.approx(1876344.84860617, rel=1e-13)
    with pytest.raises(DomainError):
        eval_power_law(fit, 0)


def test_residuals_exact_zero():
    s = RankedSeries((1, 2, 4), (5, 1.25, 0.3125))
    assert all(abs(r) < 1e-14 for _, r in residuals_log(s, fit_power_law(s)))


def test_residuals_sum_to_zero(politicians):
    s = rank_metric(politicians, "total_followers")
    res = residuals_log(s, fit_power_law(s))
    assert [r for r, _ in res] == list(range(1, 10))
    assert abs(math.fsum(r for _, r in res)) < 1e-9


def test_residuals_scale_shift(politicians):
    s = rank_metric(politicians, "total_followers")
    scaled = RankedSeries(s.ranks, tuple(10 * v for v in s.values))
    a = [r for _, r in residuals_log(s, fit_power_law(s))]
    b = [r for _, r in residuals_log(scaled, fit_power_law(scaled))]
    assert a == pytest.approx(b, abs=1e-12)


positive = st.floats(min_value=1e-3, max_value=1e9, allow_nan=False)
series_values = st.lists(positive, min_size=2, max_size=40)


@given(series_values, st.floats(min_value=1e-6, max_value=1e6))
def test_scale_invariance(values, c):
    base = fit_power_law(RankedSeries.from_values(values))
    scaled = fit_power_law(RankedSeries.from_values([c * v for v in values]))
    assert scaled.prefactor_a == pytest.approx(c * base.prefactor_a, rel=1e-9)
    assert scaled.exponent_k == pytest.approx(base.exponent_k, abs=1e-9)
    assert scaled.r_squared == pytest.approx(base.r_squared, abs=1e-9)


@given(series_values, st.floats(min_value=0.2, max_value=5))
def test_rank_axis_power_transform(values, p):
    ranks = list(range(1, len(values) + 1))
    base = fit_power_law(RankedSeries(tuple(ranks), tuple(values)))
    moved = fit_power_law(RankedSeries(tuple(float(r) ** p for r in ranks), tuple(values)))
    assert moved.exponent_k == pytest.approx(base.exponent_k / p, rel=1e-9, abs=1e-9)


@given(
    st.floats(min_value=1e-3, max_value=1e9),
    st.floats(min_value=-4, max_value=4),
    st.integers(min_value=2, max_value=200),
)
def test_exact_power_recovery(a, k, n):
    values = [a * x**k for x in range(1, n + 1)]
    fit = fit_power_law(RankedSeries.from_values(values))
    assert fit.exponent_k == pytest.approx(k, abs=1e-10)
    assert fit.prefactor_a == pytest.approx(a, rel=1e-10)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-10)


@given(series_values, st.randoms(use_true_random=False))
def test_order_independent(values, rnd):
    pairs = list(enumerate(values, start=1))
    shuffled = pairs[:]
    rnd.shuffle(shuffled)
    a = fit_power_law(RankedSeries(*zip(*pairs)))
    b = fit_power_law(RankedSeries(*zip(*shuffled)))
    assert a == b


@given(series_values)
def test_r_squared_in_unit_interval(values):
    fit = fit_power_law(RankedSeries.from_values(values))
    assert 0.0 <= fit.r_squared <= 1.0
