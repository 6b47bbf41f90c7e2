"""Income-property valuation math.

Compound-interest factors, amortization schedules (level, arbitrary
paydown, sinking-fund recovery), direct capitalization rates (band of
investment, mortgage-equity, safe-rate and straight-line recovery),
closed-form valuation of changing income streams, and NPV/IRR project
analysis. Everything is a pure function over plain floats and small
frozen dataclasses.
"""

from .timevalue import (
    compound_amount,
    pv_reversion,
    annuity_pv,
    installment_to_amortize,
    accumulation,
    sinking_fund_factor,
    balance_fraction,
    portion_paid,
)
from .recurrence import (
    RecurrenceSpec,
    OffsetStreamSpec,
    recurrence_terms,
    recurrence_term,
    value_recurrence_stream,
    value_offset_stream,
    straight_line_annuity_value,
    constant_ratio_annuity_value,
    accumulation_stream_value,
    ellwood_j_factor,
    hoskold_stream_value,
    hoskold_income_stream,
)
from .capitalization import (
    MortgageTerms,
    AppreciationSpec,
    EllwoodRate,
    perpetuity_value,
    capitalize,
    rate_from,
    adjusted_cap_rate,
    band_of_investment,
    band_with_mortgage_constant,
    mortgage_constant,
    ellwood_cap_rate,
    ellwood_j_cap_rate,
    recovery_cap_rate,
)
from .amortization import (
    AmortizationRow,
    AmortizationSchedule,
    level_schedule,
    generalized_schedule,
    sinking_fund_schedule,
    verify_main_theorem,
    schedule_to_csv,
    schedule_to_dict,
    schedule_to_json,
)
from .projects import (
    Project,
    IrrResult,
    ComparisonReport,
    DEFAULT_IRR_BOUNDS,
    npv,
    irr_all,
    negate,
    npv_slope_class,
    profitability_test,
    compare_pairwise,
    load_project,
    project_from_dict,
    analysis_table,
    analysis_to_dict,
    comparison_table,
    comparison_to_dict,
)

__version__ = "0.1.0"

__all__ = [
    "compound_amount",
    "pv_reversion",
    "annuity_pv",
    "installment_to_amortize",
    "accumulation",
    "sinking_fund_factor",
    "balance_fraction",
    "portion_paid",
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
    "MortgageTerms",
    "AppreciationSpec",
    "EllwoodRate",
    "perpetuity_value",
    "capitalize",
    "rate_from",
    "adjusted_cap_rate",
    "band_of_investment",
    "band_with_mortgage_constant",
    "mortgage_constant",
    "ellwood_cap_rate",
    "ellwood_j_cap_rate",
    "recovery_cap_rate",
    "AmortizationRow",
    "AmortizationSchedule",
    "level_schedule",
    "generalized_schedule",
    "sinking_fund_schedule",
    "verify_main_theorem",
    "schedule_to_csv",
    "schedule_to_dict",
    "schedule_to_json",
    "Project",
    "IrrResult",
    "ComparisonReport",
    "DEFAULT_IRR_BOUNDS",
    "npv",
    "irr_all",
    "negate",
    "npv_slope_class",
    "profitability_test",
    "compare_pairwise",
    "load_project",
    "project_from_dict",
    "analysis_table",
    "analysis_to_dict",
    "comparison_table",
    "comparison_to_dict",
    "__version__",
]
