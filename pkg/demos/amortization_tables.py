"""Amortization tables three ways: level payment, arbitrary paydown, and
sinking-fund capital recovery at rates below, at, and above the discount rate.

Run from the repo root:  python3 demos/amortization_tables.py
"""

import propval as pv


def show(title, schedule):
    print(f"\n{title}")
    print(f"{'k':>3}  {'payment':>10}  {'interest':>10}  {'principal':>10}  {'balance':>10}")
    for row in schedule.rows:
        print(
            f"{row.period:>3}  {row.payment:>10.2f}  {row.interest:>10.2f}"
            f"  {row.principal_reduction:>10.2f}  {row.ending_balance:>10.2f}"
        )
    print(f"discounted payments minus principal: {pv.verify_main_theorem(schedule):.2e}")


# A classic level-payment loan. Interest falls, principal rises by (1+i).
show("level payment: 1000 at 10% over 5 periods", pv.level_schedule(1000, 0.10, 5))

# Principal reductions can be anything; the payment column follows, and the
# discounted payments still sum to the principal.
show("arbitrary paydown: P = (100, 300, 600) at 10%",
     pv.generalized_schedule([100, 300, 600], 0.10))

# Even a paydown that goes backwards for a period keeps the identity.
schedule = pv.generalized_schedule([400, -200, 800], 0.10)
show("negative paydown in period 2", schedule)
print(f"balance rose in periods: {schedule.negative_amortization_periods}")

# Capital recovery through a sinking fund. The fund rate sets the income
# path: at the discount rate income is level, below it income declines,
# and at a zero fund rate the decline is a constant i*V/n per period.
for fund_rate, label in ((0.10, "fund at 10%: level income"),
                         (0.05, "fund at 5%: declining income, drops grow 5% per period"),
                         (0.00, "fund at 0%: straight-line decline of 100/period")):
    show(f"sinking-fund recovery of 1000 at 10%, {label}",
         pv.sinking_fund_schedule(1000, 0.10, fund_rate, 10))
