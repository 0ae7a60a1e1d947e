"""Command-line front end.

Exit status is 0 on success, 1 when the input fails validation and 2 on a
usage error. All numbers go through :func:`~zipfaudit.fmt.fmt_num`, so a
repeated invocation produces byte-identical output.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import json
import os
import sys
from typing import Sequence, TextIO

from . import __version__
from .audit import full_report
from .dataset import METRICS, AccountSet, load_accounts_path, rank_metric
from .errors import ZipfAuditError
from .fmt import fmt_num
from .netmodels import degree_distribution, gen_preferential_attachment, gen_small_world, gen_zipf_dataset
from .powerlaw import eval_power_law, fit_power_law, residuals_log
from .pratio import BIN_EDGES, account_ratios, bin_index, bin_log
from .zipf import zipf_deviation

SEED_ENV = "ZIPF_AUDIT_SEED"


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ZipfAuditError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _selected(args) -> AccountSet:
    accounts = load_accounts_path(args.input, args.format)
    if args.category is not None:
        accounts = accounts.by_category(args.category)
        if len(accounts) == 0:
            raise ZipfAuditError(f"no accounts in category {args.category!r}")
    return accounts


def _writer(out: TextIO):
    return csv.writer(out, lineterminator="\n")


def cmd_rank(args, out: TextIO) -> None:
    accounts = _selected(args)
    w = _writer(out)
    w.writerow(["metric", "rank", "name", "value"])
    for metric in [args.metric] if args.metric else METRICS:
        series = rank_metric(accounts, metric)
        for rank, name, value in zip(series.ranks, series.labels, series.values):
            w.writerow([metric, fmt_num(rank), name, fmt_num(value)])


def cmd_fit(args, out: TextIO) -> None:
    series = rank_metric(_selected(args), args.metric)
    fit = fit_power_law(series)
    summary = (
        f"a={fmt_num(fit.prefactor_a)} k={fmt_num(fit.exponent_k)} "
        f"r2={fmt_num(fit.r_squared)} n={fit.n_points}"
    )
    print(summary)
    lines = [f"# metric={args.metric} {summary}", "# rank value model ln_residual"]
    for (rank, resid), value in zip(residuals_log(series, fit), series.values):
        lines.append(" ".join([fmt_num(rank), fmt_num(value), fmt_num(eval_power_law(fit, rank)), fmt_num(resid)]))
    if args.output:
        out.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write("\n" + "\n".join(lines) + "\n")


def cmd_zipf(args, out: TextIO) -> None:
    report = zipf_deviation(rank_metric(_selected(args), args.metric))
    out.write(f"# metric={args.metric} max_abs_relative_error={fmt_num(report.max_abs_relative_error)}\n")
    w = _writer(out)
    w.writerow(["rank", "observed", "expected", "relative_error"])
    for rank, observed, expected, rel in report.per_rank:
        w.writerow([rank, fmt_num(observed), fmt_num(expected), fmt_num(rel)])


def cmd_pratio(args, out: TextIO) -> None:
    accounts = _selected(args)
    categories = {r.name: r.category for r in accounts}
    w = _writer(out)
    w.writerow(["name", "category", "p", "n_norm", "log_n", "bin_lo", "bin_hi"])
    for rec in account_ratios(accounts):
        idx = bin_index(rec.log_n)
        lo, hi = ("", "") if idx is None else (fmt_num(BIN_EDGES[idx]), fmt_num(BIN_EDGES[idx + 1]))
        log_n = "" if rec.log_n is None else fmt_num(rec.log_n)
        w.writerow([rec.account_name, categories[rec.account_name], fmt_num(rec.p), fmt_num(rec.n_norm), log_n, lo, hi])


def cmd_bins(args, out: TextIO) -> None:
    hist = bin_log(account_ratios(_selected(args)))
    w = _writer(out)
    w.writerow(["bin_lo", "bin_hi", "count"])
    for lo, hi, count in hist.rows():
        w.writerow([fmt_num(lo), fmt_num(hi), count])
    w.writerow(["underflow", "", hist.underflow])
    w.writerow(["overflow", "", hist.overflow])
    w.writerow(["undefined", "", hist.undefined])


def cmd_synth(args, out: TextIO) -> None:
    seed = args.seed if args.seed is not None else default_seed()
    if args.zipf:
        series = gen_zipf_dataset(args.F, args.count, seed, args.noise)
        w = _writer(out)
        for rank, value in series.pairs():
            w.writerow([fmt_num(rank), fmt_num(value)])
        return
    if args.graph == "ba":
        g = gen_preferential_attachment(args.n, args.m, seed)
    else:
        g = gen_small_world(args.n, args.k_ring, args.beta, seed)
    if args.degrees:
        w = _writer(out)
        w.writerow(["degree", "frequency"])
        for degree, freq in degree_distribution(g).pairs():
            w.writerow([fmt_num(degree), fmt_num(freq)])
    else:
        g.write_edgelist(out)


def cmd_audit(args, out: TextIO) -> None:
    report = full_report(_selected(args))
    out.write(json.dumps(report.to_dict(), indent=2) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zipf-audit",
        description="Power-law and Zipf analysis of ranked social-account metrics.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    def data_command(name, func, help, metric=None):
        p = sub.add_parser(name, help=help)
        p.add_argument("-i", "--input", required=True, help="account table (csv or json)")
        p.add_argument("--format", choices=["csv", "json"], help="input format; default from extension")
        p.add_argument("-o", "--output", help="output file; default stdout")
        p.add_argument("--category", help="restrict to accounts with this category tag")
        if metric == "required":
            p.add_argument("--metric", choices=METRICS, required=True)
        elif metric == "optional":
            p.add_argument("--metric", choices=METRICS, help="default: all three metrics")
        p.set_defaults(func=func)
        return p

    data_command("rank", cmd_rank, "rank each metric independently", metric="optional")
    data_command("fit", cmd_fit, "least-squares power-law fit of one ranked metric", metric="required")
    data_command("zipf", cmd_zipf, "deviation of one ranked metric from value(1)/n", metric="required")
    data_command("pratio", cmd_pratio, "per-account retweet-to-follower ratio")
    data_command("bins", cmd_bins, "histogram of log10 normalized ratio")
    data_command("audit", cmd_audit, "full JSON report")

    p = sub.add_parser("synth", help="generate synthetic Zipf series or networks")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--zipf", action="store_true", help="Zipf series rows: rank,value")
    kind.add_argument("--graph", choices=["ba", "ws"], help="preferential-attachment or small-world edge list")
    p.add_argument("-o", "--output", help="output file; default stdout")
    p.add_argument("--seed", type=int, help=f"default: ${SEED_ENV} or 0")
    p.add_argument("--F", type=float, default=9e7, help="rank-1 value (zipf)")
    p.add_argument("--count", type=int, default=50, help="number of ranks (zipf)")
    p.add_argument("--noise", type=float, default=0.0, help="relative uniform noise amplitude (zipf)")
    p.add_argument("--n", type=int, default=1000, help="node count (graphs)")
    p.add_argument("--m", type=int, default=3, help="edges per new node (ba)")
    p.add_argument("--k-ring", type=int, default=6, help="lattice neighbours, even (ws)")
    p.add_argument("--beta", type=float, default=0.1, help="rewiring probability (ws)")
    p.add_argument("--degrees", action="store_true", help="emit degree,frequency instead of edges")
    p.set_defaults(func=cmd_synth)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with contextlib.ExitStack() as stack:
            if args.output:
                out = stack.enter_context(open(args.output, "w", encoding="utf-8", newline=""))
            else:
                out = sys.stdout
            args.func(args, out)
    except (ZipfAuditError, OSError) as exc:
        print(f"zipf-audit {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
