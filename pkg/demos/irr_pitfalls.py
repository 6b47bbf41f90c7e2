"""Why NPV decides and IRR merely describes: the classic traps, recreated.

Run from the repo root:  python3 demos/irr_pitfalls.py
"""

import propval as pv

A = pv.Project("A", (-1000, 200, 200, 1200))
B = pv.Project("B", (-1000, 500, 500, 500))


def describe(project, rates=(0.10, 0.12)):
    result = pv.irr_all(project)
    roots = ", ".join(f"{r:.2%}" for r in result.roots) or "none"
    npvs = "  ".join(f"NPV@{r:.0%} {pv.npv(project, r):>8.2f}" for r in rates)
    print(f"{project.name:<4} {str(project.cashflows):<28} IRR {roots:<16} {npvs}")


print("two sound projects:")
describe(A)
describe(B)

# Trap 1: the mirror image of a project keeps its IRR while every NPV
# flips sign. An IRR above the hurdle proves nothing by itself.
print("\nthe lender's view of A has the same IRR and negative worth:")
describe(pv.negate(A))
print("r < IRR only implies a positive NPV when the NPV curve slopes down:")
print(f"  slope class of A : {pv.npv_slope_class(A)}")
print(f"  slope class of -A: {pv.npv_slope_class(pv.negate(A))}")
print(f"  profitability of A at 10%: {pv.profitability_test(A, 0.10)}")
print(f"  profitability of -A at 10%: {pv.profitability_test(pv.negate(A), 0.10)}")

# Trap 2: picking the higher IRR picks the wrong project at low rates.
print("\nB touts the higher IRR, yet A is worth more at 10%:")
print(f"  IRR(A) = {pv.irr_all(A).roots[0]:.2%},  IRR(B) = {pv.irr_all(B).roots[0]:.2%}")
print(f"  NPV(A, 10%) = {pv.npv(A, 0.10):.2f} > NPV(B, 10%) = {pv.npv(B, 0.10):.2f}")

# The honest way to choose between two: the difference project's IRR is
# the cutoff rate where the preference switches.
report = pv.compare_pairwise(A, B)
print("\npairwise choice through the difference project:")
print(pv.comparison_table(report), end="")

# Trap 3: projects whose cash flows change sign twice can have two IRRs,
# or none at all. Which one would you quote?
D = pv.Project("D", (-1000, 1450, 1500, -2200))
print("\na project with a cleanup cost at the end:")
describe(D, rates=(0.30,))
lowered = pv.Project("D'", (-1000, 1450, 1450, -2200))
print("trim the middle payout and the IRR vanishes entirely:")
describe(lowered, rates=(0.30,))
