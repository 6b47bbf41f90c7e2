"""A tour of the six compound-interest factors and how they interlock.

Run from the repo root:  python3 demos/six_functions.py
"""

import propval as pv

rate = 0.10

# The three basic factors and their reciprocals, side by side.
print(f"Factors at {rate:.0%} per period")
print(f"{'n':>3}  {'compound':>10}  {'reversion':>10}  {'annuity':>9}  "
      f"{'amortize':>9}  {'accumul.':>9}  {'sink fund':>9}")
for n in range(1, 11):
    print(
        f"{n:>3}"
        f"  {pv.compound_amount(rate, n):>10.6f}"
        f"  {pv.pv_reversion(rate, n):>10.6f}"
        f"  {pv.annuity_pv(rate, n):>9.6f}"
        f"  {pv.installment_to_amortize(rate, n):>9.6f}"
        f"  {pv.accumulation(rate, n):>9.6f}"
        f"  {pv.sinking_fund_factor(rate, n):>9.6f}"
    )

# The payment that retires a loan of one splits into interest on the
# whole dollar plus the deposit that rebuilds the dollar by the horizon.
n = 25
payment = pv.installment_to_amortize(rate, n)
deposit = pv.sinking_fund_factor(rate, n)
print(f"\npayment on a 1-unit {n}-period loan : {payment:.8f}")
print(f"rate + sinking fund deposit        : {rate + deposit:.8f}")

# An annuity's present value restated as a future amount.
print(f"\naccumulation(25)                   : {pv.accumulation(rate, n):.8f}")
print(f"(1+r)^25 * annuity_pv(25)          : {pv.compound_amount(rate, n) * pv.annuity_pv(rate, n):.8f}")

# How much of a 30-year monthly mortgage is still owed as time passes.
monthly, months = 0.08 / 12, 360
print("\nshare of a 30-year 8% monthly loan still owed:")
for years in (0, 5, 10, 15, 20, 25, 30):
    frac = pv.balance_fraction(12 * years, months, monthly)
    print(f"  after {years:>2} years: {frac:7.4f}   (repaid {pv.portion_paid(12 * years, months, monthly):7.4f})")
