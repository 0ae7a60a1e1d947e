"""Deterministic number formatting for every text output."""
from __future__ import annotations

import math
from decimal import Decimal
from fractions import Fraction

_INT_LIMIT = 10**15


def fmt_num(x) -> str:
    """Integral values print as integers; others with 6 significant digits,
    in lowercase scientific notation when |x| is outside [1e-3, 1e6)."""
    if isinstance(x, (int, Fraction, Decimal)) and not isinstance(x, bool):
        if x == int(x) and abs(x) < _INT_LIMIT:
            return str(int(x))
        x = float(x)
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        return str(x).lower()
    if x == int(x) and abs(x) < _INT_LIMIT:
        return str(int(x))
    if 1e-3 <= abs(x) < 1e6:
        text = f"{x:.6g}"
        if "e" not in text:
            return text
    mantissa, exponent = f"{x:.5e}".split("e")
    if "." in mantissa:
        mantissa = mantissa.rstrip("0").rstrip(".")
    return f"{mantissa}e{int(exponent)}"
