"""Rank-spectrum analysis of social-account metrics.

Fits ``y = a * x**k`` to ranked metrics, compares them with Zipf's 1/n law,
computes the retweet-to-follower ratio with log binning, and builds
category-level audit reports. Synthetic network generators serve as oracles.
"""
from ._kernels import BACKEND
from .audit import AccountScore, CategoryReport, account_scores, category_report, full_report
from .dataset import (
    METRICS,
    AccountRecord,
    AccountSet,
    RankedSeries,
    format_count,
    load_accounts,
    load_accounts_path,
    parse_count,
    rank_metric,
)
from .netmodels import (
    SyntheticGraph,
    degree_distribution,
    gen_preferential_attachment,
    gen_small_world,
    gen_zipf_dataset,
    mean_path_length,
    small_world_scaling,
)
from .powerlaw import PowerLawFit, eval_power_law, fit_power_law, residuals_log
from .pratio import BIN_EDGES, BinHistogram, LogTrend, PRatioRecord, bin_log, log_trend_fit, p_ratio
from .zipf import DeviationReport, ZipfModel, zipf_deviation, zipf_expected, zipf_series

__version__ = "0.1.0"
