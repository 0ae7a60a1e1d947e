"""Account records, count parsing and per-metric ranking.

Counts are stored as :class:`~decimal.Decimal` so that table cells such as
``"84.80M"`` expand to exactly 84800000 and format back to the same text.
"""
from __future__ import annotations

import csv
import io
import json
import math
import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Real
from typing import Iterable, Iterator, Sequence, TextIO

from .errors import EmptyInputError, ParseError, ValidationError

METRICS = ("total_tweets", "average_retweets", "total_followers")
COLUMNS = ("name", "category") + METRICS

_SUFFIX_SCALE = {"": 1, "K": 10**3, "M": 10**6, "B": 10**9}
_COUNT_RE = re.compile(r"^([+-]?)(\d+(?:\.\d*)?|\.\d+)([KkMmBb]?)$")


def parse_count(text: str) -> Decimal:
    """Expand a suffixed decimal such as ``"51.70K"`` into an exact count."""
    token = text.strip()
    match = _COUNT_RE.match(token)
    if match is None:
        raise ParseError(f"malformed count {text!r}")
    sign, number, suffix = match.groups()
    value = Decimal(number) * _SUFFIX_SCALE[suffix.upper()]
    if sign == "-" and value != 0:
        raise ValidationError(f"negative count {text!r}")
    return value


def format_count(value: Decimal | int, suffix: str = "", places: int = 2) -> str:
    """Inverse of :func:`parse_count` for a chosen suffix and decimal places."""
    scale = _SUFFIX_SCALE[suffix.upper()]
    scaled = Decimal(value) / scale
    return f"{scaled:.{places}f}{suffix}"


def _coerce_count(cell: object) -> Decimal:
    if isinstance(cell, bool):
        raise ParseError(f"malformed count {cell!r}")
    if isinstance(cell, str):
        return parse_count(cell)
    if isinstance(cell, int):
        value = Decimal(cell)
    elif isinstance(cell, float):
        if not math.isfinite(cell):
            raise ValidationError(f"non-finite count {cell!r}")
        value = Decimal(repr(cell))
    else:
        raise ParseError(f"malformed count {cell!r}")
    if value < 0:
        raise ValidationError(f"negative count {cell!r}")
    return value


@dataclass(frozen=True)
class AccountRecord:
    name: str
    category: str
    total_tweets: Decimal
    average_retweets: Decimal
    total_followers: Decimal

    def __post_init__(self) -> None:
        if not self.name:
            raise ValidationError("account name must be non-empty")
        for metric in METRICS:
            value = getattr(self, metric)
            if not isinstance(value, Decimal):
                object.__setattr__(self, metric, _coerce_count(value))
            elif not value.is_finite() or value < 0:
                raise ValidationError(f"{self.name}: {metric} must be finite and >= 0, got {value}")

    def metric(self, metric: str) -> Decimal:
        _check_metric(metric)
        return getattr(self, metric)


@dataclass(frozen=True)
class AccountSet:
    records: tuple[AccountRecord, ...] = ()
    source: str = "inline"

    def __post_init__(self) -> None:
        object.__setattr__(self, "records", tuple(self.records))
        seen: set[str] = set()
        for record in self.records:
            if record.name in seen:
                raise ValidationError(f"duplicate account name {record.name!r}")
            seen.add(record.name)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[AccountRecord]:
        return iter(self.records)

    def categories(self) -> list[str]:
        return sorted({r.category for r in self.records})

    def by_category(self, category: str) -> AccountSet:
        return AccountSet(tuple(r for r in self.records if r.category == category), self.source)

    @classmethod
    def merge(cls, sets: Iterable[AccountSet], source: str = "merged") -> AccountSet:
        return cls(tuple(r for s in sets for r in s.records), source)


@dataclass(frozen=True)
class RankedSeries:
    """Values on a positive x-axis, usually ranks 1..n in descending value order.

    ``ranks`` is the abscissa handed to the fitter. For a degree histogram it
    holds degree values rather than 1..n. Exact inputs (int, Decimal,
    Fraction) are kept as :class:`~fractions.Fraction`; floats stay floats.
    """

    ranks: tuple[Real, ...]
    values: tuple[Real, ...]
    labels: tuple[str, ...] | None = None
    metric: str | None = None

    def __post_init__(self) -> None:
        if len(self.ranks) != len(self.values):
            raise ValidationError("ranks and values differ in length")
        if self.labels is not None and len(self.labels) != len(self.values):
            raise ValidationError("labels and values differ in length")
        object.__setattr__(self, "ranks", tuple(_exact(r) for r in self.ranks))
        object.__setattr__(self, "values", tuple(_exact(v) for v in self.values))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_values(cls, values: Sequence[Real], labels=None, metric=None) -> RankedSeries:
        return cls(tuple(range(1, len(values) + 1)), tuple(values), labels, metric)

    def __len__(self) -> int:
        return len(self.values)

    def value(self, rank: int) -> Real:
        """Value at 1-based position ``rank``."""
        if not 1 <= rank <= len(self.values):
            raise IndexError(f"rank {rank} outside 1..{len(self.values)}")
        return self.values[rank - 1]

    def pairs(self) -> list[tuple[Real, Real]]:
        return list(zip(self.ranks, self.values))


def _exact(v):
    if isinstance(v, float):
        return v
    if isinstance(v, (int, Decimal)):
        return Fraction(v)
    if isinstance(v, Fraction):
        return v
    return float(v)


def _check_metric(metric: str) -> None:
    if metric not in METRICS:
        raise ValidationError(f"unknown metric {metric!r}; expected one of {', '.join(METRICS)}")


def _record_from_row(row: dict, rowno: int) -> AccountRecord:
    counts = {}
    for metric in METRICS:
        cell = row[metric]
        try:
            counts[metric] = _coerce_count(cell)
        except (ParseError, ValidationError) as exc:
            raise type(exc)(f"row {rowno}, column {metric}: bad cell {cell!r} ({exc})") from None
    name = str(row["name"]).strip()
    if not name:
        raise ValidationError(f"row {rowno}: empty account name")
    return AccountRecord(name=name, category=str(row["category"]).strip(), **counts)


def load_accounts(source: TextIO | str, format: str = "csv", origin: str = "inline") -> AccountSet:
    """Read an :class:`AccountSet` from a CSV or JSON text stream.

    CSV needs the header ``name,category,total_tweets,average_retweets,
    total_followers``; JSON is an array of objects with those keys. Row
    numbers in errors count the header as row 1.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    if format == "csv":
        reader = csv.DictReader(source)
        if reader.fieldnames is None:
            raise ValidationError("csv input has no header row")
        header = [h.strip() for h in reader.fieldnames]
        reader.fieldnames = header
        for column in COLUMNS:
            if column not in header:
                raise ValidationError(f"missing column {column!r}")
        rows = ((i, row) for i, row in enumerate(reader, start=2))
    elif format == "json":
        try:
            data = json.load(source)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid json: {exc}") from None
        if not isinstance(data, list):
            raise ValidationError("json input must be an array of objects")
        for i, obj in enumerate(data, start=1):
            if not isinstance(obj, dict):
                raise ValidationError(f"row {i}: expected an object")
            for column in COLUMNS:
                if column not in obj:
                    raise ValidationError(f"row {i}: missing column {column!r}")
        rows = enumerate(data, start=1)
    else:
        raise ValidationError(f"unsupported format {format!r}")

    records = []
    seen: set[str] = set()
    for rowno, row in rows:
        record = _record_from_row(row, rowno)
        if record.name in seen:
            raise ValidationError(f"row {rowno}: duplicate account name {record.name!r}")
        seen.add(record.name)
        records.append(record)
    return AccountSet(tuple(records), origin)


def load_accounts_path(path: str, format: str | None = None) -> AccountSet:
    if format is None:
        format = "json" if str(path).lower().endswith(".json") else "csv"
    with open(path, encoding="utf-8", newline="") as fh:
        return load_accounts(fh, format, origin=str(path))


def rank_metric(accounts: AccountSet, metric: str) -> RankedSeries:
    """Rank one metric independently: descending value, ties by ascending name."""
    _check_metric(metric)
    if len(accounts) == 0:
        raise EmptyInputError(f"cannot rank {metric} of an empty account set")
    ordered = sorted(accounts.records, key=lambda r: (-r.metric(metric), r.name))
    return RankedSeries(
        ranks=tuple(range(1, len(ordered) + 1)),
        values=tuple(r.metric(metric) for r in ordered),
        labels=tuple(r.name for r in ordered),
        metric=metric,
    )
