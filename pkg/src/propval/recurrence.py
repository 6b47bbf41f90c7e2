"""Valuation of changing income streams driven by first-order recurrences.

A stream is generated by y_0 = seed and y_k = multiplier * y_(k-1) +
increment; taking y_k as the income at the end of period k, the present
value has a closed form in four regimes of the multiplier versus the
discount rate. The offset form values streams that start at a level d and
shed y_k-sized slices of it each period, which covers the straight-line
declining annuity, the constant-ratio growth annuity, the income stream
behind the accelerating-change cap-rate premise, and the sinking-fund
declining streams behind the Ring and Hoskold capitalization methods.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .timevalue import (
    accumulation,
    annuity_pv,
    sinking_fund_factor,
    _check_periods,
    _check_rate,
)

__all__ = [
    "RecurrenceSpec",
    "OffsetStreamSpec",
    "recurrence_terms",
    "recurrence_term",
    "value_recurrence_stream",
    "value_offset_stream",
    "straight_line_annuity_value",
    "constant_ratio_annuity_value",
    "accumulation_stream_value",
    "ellwood_j_factor",
    "hoskold_stream_value",
    "hoskold_income_stream",
]

# Closed-form dispatch window: multipliers this close to 1 (or to 1+i) take
# the degenerate branch instead of dividing by a vanishing m-1 or i-m gap.
_DISPATCH_TOL = 1e-12


@dataclass(frozen=True)
class RecurrenceSpec:
    """Generator y_0 = seed, y_k = multiplier * y_(k-1) + increment."""

    multiplier: float
    increment: float
    seed: float

    def __post_init__(self) -> None:
        for field in ("multiplier", "increment", "seed"):
            value = getattr(self, field)
            if not math.isfinite(value):
                raise ValueError(f"{field} must be finite, got {value!r}")


@dataclass(frozen=True)
class OffsetStreamSpec:
    """Stream d, d - y_1*h, d - y_2*h, ... built off a recurrence.

    first_income is d; decrement is h, the amount each generated y_k shaves
    off the base income one period later. A negative decrement produces a
    rising stream.
    """

    first_income: float
    decrement: float
    recurrence: RecurrenceSpec

    def __post_init__(self) -> None:
        if not math.isfinite(self.first_income):
            raise ValueError(f"first_income must be finite, got {self.first_income!r}")
        if not math.isfinite(self.decrement):
            raise ValueError(f"decrement must be finite, got {self.decrement!r}")
        if self.recurrence.multiplier == 0.0:
            raise ValueError("offset streams need a nonzero recurrence multiplier")


def recurrence_terms(spec: RecurrenceSpec, n: int) -> list[float]:
    """First n generated terms y_1..y_n, by iterating the recurrence."""
    n = _check_periods(n)
    terms = []
    y = spec.seed
    for _ in range(n):
        y = spec.multiplier * y + spec.increment
        terms.append(y)
    return terms


def recurrence_term(spec: RecurrenceSpec, k: int) -> float:
    """Closed form for y_k: m^k c + b(m^k - 1)/(m - 1), or c + kb when m = 1."""
    k = _check_periods(k, name="k", minimum=0)
    m, b, c = spec.multiplier, spec.increment, spec.seed
    if abs(m - 1.0) < _DISPATCH_TOL:
        return c + k * b
    mk = m**k
    return mk * c + b * (mk - 1.0) / (m - 1.0)


def value_recurrence_stream(spec: RecurrenceSpec, rate: float, n: int) -> float:
    """Present value of y_1..y_n discounted at the given rate.

    Dispatches on the multiplier m against 1 and 1+i:
      m matches neither      -> [b/(m-1) + c] * m(1 - (m/(1+i))^n)/(1+i-m) - b/(m-1) * a_n
      m = 1+i (i nonzero)    -> n*c + b(n - a_n)/i
      m = 1   (i nonzero)    -> [c + (n+1)b] a_n - b(n - a_n)/i
      m = 1, i = 0           -> n*c + b*n(n+1)/2
    """
    rate = _check_rate(rate)
    n = _check_periods(n)
    m, b, c = spec.multiplier, spec.increment, spec.seed
    if abs(m - 1.0) < _DISPATCH_TOL:
        if abs(rate) < _DISPATCH_TOL:
            return n * c + b * n * (n + 1) / 2.0
        a_n = annuity_pv(rate, n)
        return (c + (n + 1) * b) * a_n - b * (n - a_n) / rate
    if abs(m - (1.0 + rate)) < _DISPATCH_TOL:
        a_n = annuity_pv(rate, n)
        return n * c + b * (n - a_n) / rate
    a_n = annuity_pv(rate, n)
    ratio = m / (1.0 + rate)
    geometric = m * (1.0 - ratio**n) / (1.0 + rate - m)
    scale = b / (m - 1.0)
    return (scale + c) * geometric - scale * a_n


def value_offset_stream(spec: OffsetStreamSpec, rate: float, n: int) -> float:
    """Present value of d, d - y_1*h, ..., d - y_(n-1)*h discounted at rate.

    Evaluated as [d + bh/m] a_n - h V_n / m + h c / (1+i), which reuses the
    closed form for V_n above.
    """
    rate = _check_rate(rate)
    n = _check_periods(n)
    m, b, c = spec.recurrence.multiplier, spec.recurrence.increment, spec.recurrence.seed
    if m == 0.0:
        raise ValueError("offset streams need a nonzero recurrence multiplier")
    d, h = spec.first_income, spec.decrement
    v_n = value_recurrence_stream(spec.recurrence, rate, n)
    a_n = annuity_pv(rate, n)
    return (d + b * h / m) * a_n - h * v_n / m + h * c / (1.0 + rate)


def straight_line_annuity_value(d: float, h: float, rate: float, n: int) -> float:
    """Value of the stream d, d-h, d-2h, ..., d-(n-1)h.

    [d - nh] a_n + h(n - a_n)/i for a nonzero rate; a negative h values a
    stream rising by a constant amount.
    """
    rate = _check_rate(rate)
    n = _check_periods(n)
    if abs(rate) < _DISPATCH_TOL:
        counting = RecurrenceSpec(multiplier=1.0, increment=1.0, seed=0.0)
        return value_offset_stream(OffsetStreamSpec(d, h, counting), rate, n)
    a_n = annuity_pv(rate, n)
    return (d - n * h) * a_n + h * (n - a_n) / rate


def constant_ratio_annuity_value(growth: float, rate: float, n: int) -> float:
    """Value of a stream starting at one and growing by a fixed ratio.

    [1 - ((1+g)/(1+i))^n] / (i - g); when g = i every discounted term is
    1/(1+i), so the value is n/(1+i).
    """
    growth = _check_rate(growth, name="growth")
    rate = _check_rate(rate)
    n = _check_periods(n)
    if abs(growth - rate) < _DISPATCH_TOL:
        return n / (1.0 + rate)
    return (1.0 - ((1.0 + growth) / (1.0 + rate)) ** n) / (rate - growth)


def accumulation_stream_value(rate: float, n: int) -> float:
    """Value of the stream s_1, s_2, ..., s_n of accumulation factors.

    Equals the sum of a_1..a_n, and collapses to (n - a_n)/i. Rejects a
    zero rate; that limit is n(n+1)/2 and lives on the recurrence path.
    """
    rate = _check_rate(rate)
    n = _check_periods(n)
    if rate == 0.0:
        raise ValueError("rate must be nonzero; the zero-rate value is n(n+1)/2")
    return (n - annuity_pv(rate, n)) / rate


def ellwood_j_factor(rate: float, n: int) -> float:
    """Curvature factor for income changing along an accumulation path.

    J = (1/s_n) * (n / (1 - (1+i)^-n) - 1/i). Scales the relative income
    change in the denominator of the changing-income cap rate.
    """
    rate = _check_rate(rate)
    n = _check_periods(n)
    if rate == 0.0:
        raise ValueError("rate must be nonzero")
    s_n = accumulation(rate, n)
    return (n / (1.0 - (1.0 + rate) ** (-n)) - 1.0 / rate) / s_n


def hoskold_stream_value(income: float, rate: float, safe_rate: float, n: int) -> float:
    """Value of the declining stream priced by the safe-rate recovery method.

    V = I / (i + SFF(n, i_s)): first-year income divided by the discount
    rate loaded with a sinking fund factor at the lower safe rate. The
    stream itself (see hoskold_income_stream) declines by the compounding
    interest losses of recovering capital at the safe rate.
    """
    rate = _check_rate(rate)
    if safe_rate < 0.0:
        raise ValueError(f"safe_rate must be >= 0, got {safe_rate!r}")
    n = _check_periods(n)
    denom = rate + sinking_fund_factor(safe_rate, n)
    if denom == 0.0:
        raise ValueError("rate plus sinking fund factor is zero; value undefined")
    return income / denom


def hoskold_income_stream(income: float, rate: float, safe_rate: float, n: int) -> list[float]:
    """The declining incomes whose present value is hoskold_stream_value.

    I_k = I - (i - i_s) * SFF(n, i_s) * V * s(k-1, i_s): the first income is
    I and each later one sheds the accumulated interest losses on the
    safe-rate recovery deposits. With i_s = 0 the drop is the constant
    i*V/n of the straight-line method; with i_s = i the stream is level.
    """
    value = hoskold_stream_value(income, rate, safe_rate, n)
    loss = (rate - safe_rate) * sinking_fund_factor(safe_rate, n) * value
    incomes = []
    for k in range(1, n + 1):
        accumulated = 0.0 if k == 1 else accumulation(safe_rate, k - 1)
        incomes.append(income - loss * accumulated)
    return incomes
