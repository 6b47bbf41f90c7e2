"""Cash-flow project analysis: NPV, all-root IRR search, and comparison.

A project is a dated cash-flow vector starting at time zero. NPV is the
plain discounted sum; the IRR search scans the rate axis for sign changes
and bisects each bracket, so it finds every transversal root in bounds
(tangent roots, where the NPV curve touches zero without crossing, are not
guaranteed). The pitfalls of quoting a single IRR are first-class here:
sign-flipped projects share roots, multiple or missing roots are reported
as such, and the profitability shortcut r < IRR is only applied when the
NPV curve is guaranteed to slope downward.

Pairwise choice works through the difference project: subtract the two
cash-flow vectors in the orientation whose NPV slopes downward, and its
unique IRR is the cutoff rate below which the later-paying project wins.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .render import align_table, format_fixed, format_percent

__all__ = [
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
    "project_to_dict",
    "analysis_to_dict",
    "analysis_table",
    "comparison_to_dict",
    "comparison_table",
]

DEFAULT_IRR_BOUNDS = (-0.999, 10.0)
SCAN_STEP = 1e-3
ROOT_TOL = 1e-9
# bisection may continue past ROOT_TOL width until the NPV residual is this
# small relative to total absolute cash flow (steep curves near rate -1)
NPV_RESIDUAL_REL = 1e-6


@dataclass(frozen=True)
class Project:
    """Named cash-flow series; cashflows[t] lands at the end of period t."""

    name: str
    cashflows: tuple[float, ...]

    def __post_init__(self) -> None:
        flows = tuple(float(c) for c in self.cashflows)
        object.__setattr__(self, "cashflows", flows)
        if len(flows) < 2:
            raise ValueError("a project needs at least two cash flows")
        if not all(math.isfinite(c) for c in flows):
            raise ValueError("cash flows must be finite")

    @property
    def gross(self) -> float:
        """Sum of absolute cash flows; the scale for NPV residual checks."""
        return math.fsum(abs(c) for c in self.cashflows)


@dataclass(frozen=True)
class IrrResult:
    """Every discount rate in search_bounds that zeroes the project's NPV."""

    roots: tuple[float, ...]
    classification: str  # 'unique' | 'multiple' | 'none'
    search_bounds: tuple[float, float]


@dataclass(frozen=True)
class ComparisonReport:
    """Outcome of a pairwise choice via the difference project.

    difference_project is oriented with the later-paying project first so
    its NPV slopes downward; cutoff_rate is that project's unique IRR when
    one exists in bounds. preferred_below names the better project for
    discount rates under the cutoff. orientation_valid is False when
    neither subtraction order has a guaranteed-decreasing NPV, and
    degenerate marks identical inputs.
    """

    first: Project
    second: Project
    difference_project: Project
    cutoff_rate: float | None
    preferred_below: str | None
    preferred_above: str | None
    orientation_valid: bool
    degenerate: bool = False


def npv(project: Project, rate: float) -> float:
    """Net present value at the given rate: sum of C_t / (1+r)^t."""
    if not rate > -1.0:
        raise ValueError(f"rate must exceed -1, got {rate!r}")
    factor = 1.0
    total = project.cashflows[0]
    for flow in project.cashflows[1:]:
        factor /= 1.0 + rate
        total += flow * factor
    return total


def _npv_grid(cashflows: tuple[float, ...], rates: np.ndarray) -> np.ndarray:
    # Horner in 1/(1+r): C_0 + w(C_1 + w(C_2 + ...))
    w = 1.0 / (1.0 + rates)
    vals = np.full_like(rates, cashflows[-1])
    for flow in cashflows[-2::-1]:
        vals = vals * w + flow
    return vals


def _bisect(f, lo: float, hi: float, f_lo: float, width_tol: float, residual_tol: float) -> float:
    # phase 1: shrink the bracket to width_tol
    while hi - lo > width_tol:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if f_lo * f_mid < 0.0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    # phase 2: keep halving while the NPV residual is still large; the
    # curve can be steep enough near rate -1 that width alone is not enough
    while True:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        floor = 4.0 * math.ulp(max(abs(lo), abs(hi), 1.0))
        if f_mid == 0.0 or abs(f_mid) <= residual_tol or (hi - lo) <= floor:
            return mid
        if f_lo * f_mid < 0.0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid


def irr_all(
    project: Project,
    bounds: tuple[float, float] = DEFAULT_IRR_BOUNDS,
    scan_step: float = SCAN_STEP,
) -> IrrResult:
    """Find every IRR in bounds by sign-change scan plus bisection.

    The scan walks the rate axis in scan_step increments; each strict sign
    change is refined to a root within ROOT_TOL. An empty result (the NPV
    curve never crosses zero in bounds) is a valid outcome, classified
    'none'.
    """
    if not any(c != 0.0 for c in project.cashflows):
        raise ValueError("project has no nonzero cash flows; IRR undefined")
    lo, hi = float(bounds[0]), float(bounds[1])
    if not lo > -1.0:
        raise ValueError(f"lower bound must exceed -1, got {lo!r}")
    if not hi > lo:
        raise ValueError(f"bounds must be increasing, got {bounds!r}")
    steps = max(1, int(math.ceil((hi - lo) / scan_step)))
    grid = np.linspace(lo, hi, steps + 1)
    vals = _npv_grid(project.cashflows, grid)

    residual_tol = NPV_RESIDUAL_REL * project.gross

    def f(rate: float) -> float:
        return npv(project, rate)

    roots: list[float] = []
    for j in range(len(grid) - 1):
        if vals[j] == 0.0:
            roots.append(float(grid[j]))
        elif vals[j] * vals[j + 1] < 0.0:
            roots.append(
                _bisect(f, float(grid[j]), float(grid[j + 1]), float(vals[j]), ROOT_TOL, residual_tol)
            )
    if vals[-1] == 0.0:
        roots.append(float(grid[-1]))

    roots.sort()
    if not roots:
        classification = "none"
    elif len(roots) == 1:
        classification = "unique"
    else:
        classification = "multiple"
    return IrrResult(tuple(roots), classification, (lo, hi))


def negate(project: Project) -> Project:
    """Flip every cash flow; the lender's view of the borrower's project.

    Shares all IRRs with the original while every NPV changes sign, which
    is why r < IRR alone says nothing about profitability.
    """
    name = project.name[1:] if project.name.startswith("-") else f"-{project.name}"
    return Project(name, tuple(-c for c in project.cashflows))


def npv_slope_class(project: Project) -> str:
    """'decreasing' when the NPV curve is guaranteed to slope downward.

    That holds when the nonzero cash flows, in time order, are some
    negatives followed by some positives with exactly one sign change.
    Anything else returns 'not_guaranteed'.
    """
    signs = [c > 0.0 for c in project.cashflows if c != 0.0]
    if not signs or signs[0]:
        return "not_guaranteed"
    changes = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    return "decreasing" if changes == 1 else "not_guaranteed"


def profitability_test(project: Project, rate: float) -> str:
    """Apply the r < IRR shortcut where it is actually valid.

    Returns 'profitable' or 'unprofitable' only when the NPV curve is
    guaranteed decreasing and exactly one IRR exists; otherwise
    'inapplicable' (judge by NPV directly). Rates within the root
    tolerance of the IRR count as not below it, so an NPV of zero reads
    as unprofitable.
    """
    if npv_slope_class(project) != "decreasing":
        return "inapplicable"
    result = irr_all(project)
    if result.classification != "unique":
        return "inapplicable"
    return "profitable" if rate < result.roots[0] - ROOT_TOL else "unprofitable"


def _padded(p: Project, length: int) -> tuple[float, ...]:
    return p.cashflows + (0.0,) * (length - len(p.cashflows))


def compare_pairwise(p1: Project, p2: Project) -> ComparisonReport:
    """Choose between two projects via the IRR of their difference.

    Both subtraction orders are formed (shorter project zero-padded); the
    one with a guaranteed-decreasing NPV is kept, putting the later-paying
    project first. Its unique IRR is the cutoff: the later payer is
    preferred at discount rates below it, the other project above it.
    """
    length = max(len(p1.cashflows), len(p2.cashflows))
    flows1, flows2 = _padded(p1, length), _padded(p2, length)
    diff12 = tuple(a - b for a, b in zip(flows1, flows2))
    if all(c == 0.0 for c in diff12):
        zero = Project(f"{p1.name}-{p2.name}", diff12)
        return ComparisonReport(
            first=p1,
            second=p2,
            difference_project=zero,
            cutoff_rate=None,
            preferred_below=None,
            preferred_above=None,
            orientation_valid=False,
            degenerate=True,
        )

    proj12 = Project(f"{p1.name}-{p2.name}", diff12)
    proj21 = Project(f"{p2.name}-{p1.name}", tuple(-c for c in diff12))
    if npv_slope_class(proj12) == "decreasing":
        difference, later, earlier = proj12, p1, p2
    elif npv_slope_class(proj21) == "decreasing":
        difference, later, earlier = proj21, p2, p1
    else:
        return ComparisonReport(
            first=p1,
            second=p2,
            difference_project=proj12,
            cutoff_rate=None,
            preferred_below=None,
            preferred_above=None,
            orientation_valid=False,
        )

    result = irr_all(difference)
    if result.classification == "unique":
        cutoff = result.roots[0]
        below, above = later.name, earlier.name
    else:
        cutoff, below, above = None, None, None
    return ComparisonReport(
        first=p1,
        second=p2,
        difference_project=difference,
        cutoff_rate=cutoff,
        preferred_below=below,
        preferred_above=above,
        orientation_valid=True,
    )


# ---------------------------------------------------------------------------
# ingestion and report emission


def project_from_dict(data: dict, fallback_name: str = "project") -> Project:
    """Build a validated Project from {"name": ..., "cashflows": [...]}."""
    if not isinstance(data, dict):
        raise ValueError("project JSON must be an object with name and cashflows")
    name = data.get("name", fallback_name)
    if not isinstance(name, str) or not name:
        raise ValueError("project name must be a non-empty string")
    flows = data.get("cashflows")
    if not isinstance(flows, list) or len(flows) < 2:
        raise ValueError("cashflows must be a list of at least two numbers")
    if not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in flows):
        raise ValueError("cashflows must all be numbers")
    project = Project(name, tuple(float(c) for c in flows))
    if not any(c != 0.0 for c in project.cashflows):
        raise ValueError("cashflows must include a nonzero entry")
    return project


def load_project(path: str) -> Project:
    """Read a project from a UTF-8 JSON file."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return project_from_dict(data, fallback_name=path)


def project_to_dict(project: Project) -> dict:
    return {"name": project.name, "cashflows": list(project.cashflows)}


def analysis_to_dict(
    project: Project, result: IrrResult, npv_rates: tuple[float, ...] = ()
) -> dict:
    """Raw-double analysis record for one project."""
    return {
        "schema": 1,
        "name": project.name,
        "cashflows": list(project.cashflows),
        "irr": {
            "roots": list(result.roots),
            "classification": result.classification,
            "search_bounds": list(result.search_bounds),
        },
        "npv": {f"{r:g}": npv(project, r) for r in npv_rates},
    }


def _irr_cell(result: IrrResult) -> str:
    if not result.roots:
        return "none"
    return ", ".join(format_percent(r) for r in result.roots)


def _project_rows(
    entries: list[tuple[Project, IrrResult]], npv_rates: tuple[float, ...]
) -> list[list[str]]:
    horizon = max(len(p.cashflows) for p, _ in entries)
    header = ["Project"] + [f"C{t}" for t in range(horizon)] + ["IRR"]
    header += [f"NPV @ {format_percent(r)}" for r in npv_rates]
    rows = [header]
    for project, result in entries:
        flows = project.cashflows + (0.0,) * (horizon - len(project.cashflows))
        row = [project.name] + [format_fixed(c, 2) for c in flows] + [_irr_cell(result)]
        row += [format_fixed(npv(project, r), 2) for r in npv_rates]
        rows.append(row)
    return rows


def analysis_table(
    project: Project, result: IrrResult, npv_rates: tuple[float, ...] = ()
) -> str:
    """Aligned one-project table with IRR and requested NPV columns."""
    text = align_table(_project_rows([(project, result)], npv_rates))
    return text + f"classification: {result.classification}\n"


def comparison_to_dict(
    report: ComparisonReport, npv_rates: tuple[float, ...] = ()
) -> dict:
    """Raw-double comparison record including both projects and the difference."""
    def entry(project: Project) -> dict:
        return analysis_to_dict(project, irr_all(project), npv_rates)

    difference = report.difference_project
    diff_entry = (
        entry(difference)
        if any(c != 0.0 for c in difference.cashflows)
        else {
            "schema": 1,
            "name": difference.name,
            "cashflows": list(difference.cashflows),
            "irr": None,
            "npv": {},
        }
    )
    return {
        "schema": 1,
        "projects": [entry(report.first), entry(report.second)],
        "difference": diff_entry,
        "cutoff_rate": report.cutoff_rate,
        "preferred_below": report.preferred_below,
        "preferred_above": report.preferred_above,
        "orientation_valid": report.orientation_valid,
        "degenerate": report.degenerate,
    }


def comparison_table(
    report: ComparisonReport, npv_rates: tuple[float, ...] = (0.10, 0.12)
) -> str:
    """Aligned table of both projects plus the difference, then the verdict."""
    entries = [
        (report.first, irr_all(report.first)),
        (report.second, irr_all(report.second)),
    ]
    if any(c != 0.0 for c in report.difference_project.cashflows):
        entries.append((report.difference_project, irr_all(report.difference_project)))
    text = align_table(_project_rows(entries, npv_rates))
    if report.degenerate:
        return text + "degenerate: projects are identical\n"
    if not report.orientation_valid:
        return text + "no orientation of the difference has a guaranteed-decreasing NPV; no cutoff\n"
    if report.cutoff_rate is None:
        return text + "difference project has no unique IRR in bounds; no cutoff\n"
    return text + (
        f"cutoff rate: {format_percent(report.cutoff_rate)}\n"
        f"preferred below cutoff: {report.preferred_below}\n"
        f"preferred above cutoff: {report.preferred_above}\n"
    )
