"""Deterministic number formatting for CSV, tables, and reports.

All rendering is locale-independent: '.' decimal separator, no grouping,
ties rounded away from zero. Raw doubles belong in JSON output; these
helpers exist for the human-facing and CSV layers only.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal

__all__ = ["format_fixed", "format_percent", "align_table"]


def format_fixed(value: float, places: int) -> str:
    """Fixed-point string with the given decimals, ties away from zero."""
    if places < 0 or places > 12:
        raise ValueError(f"places must be in 0..12, got {places!r}")
    quantum = Decimal(1).scaleb(-places)
    quantized = Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP)
    if quantized == 0:
        quantized = abs(quantized)  # avoid "-0.00"
    return f"{quantized:f}"


def format_percent(rate: float, places: int = 2) -> str:
    """Rate fraction as a percentage string: 0.2 -> '20.00%'."""
    return format_fixed(rate * 100.0, places) + "%"


def align_table(rows: list[list[str]]) -> str:
    """Left-aligned columns padded to the widest cell, two-space gutters."""
    widths = [max(len(row[col]) for row in rows) for col in range(len(rows[0]))]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in rows
    ]
    return "\n".join(lines) + "\n"
