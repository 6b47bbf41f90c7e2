"""Direct capitalization: one period's income divided by a rate built from
the deal structure.

Run from the repo root:  python3 demos/cap_rates.py
"""

import propval as pv

noi = 100.0

# A perpetuity is the simplest case: income over the discount rate.
print(f"perpetuity of {noi:.0f} at 10%: {pv.perpetuity_value(noi, 0.10):,.2f}")

# A wasting asset loads a sinking fund factor on top; appreciation unloads.
for change, label in ((-1.0, "wastes away"), (0.0, "holds value"), (0.5, "appreciates 50%")):
    rate = pv.adjusted_cap_rate(0.10, 10, change)
    print(f"10-year asset that {label:<16}: R = {rate:.4f}, V = {pv.capitalize(noi, rate):,.2f}")

# Band of investment: the cap rate is a value-weighted blend of the debt
# and equity requirements.
rate = pv.band_of_investment(0.7, 0.08, 0.12)
print(f"\n70% interest-only debt at 8%, equity wants 12%: R = {rate:.4f}")

rm = pv.mortgage_constant(0.09, 300)
print(f"mortgage constant, 9% amortized over 300 months: {rm:.4f}")
print(f"band with amortizing debt: R = {pv.band_with_mortgage_constant(0.6, rm, 0.13):.4f}")

# The full mortgage-equity rate: loan paydown builds equity, resale value
# may drift, and the C factor packages the leverage effect.
terms = pv.MortgageTerms(loan_to_value=0.7, annual_rate=0.09,
                         amortization_months=300, holding_years=10)
result = pv.ellwood_cap_rate(terms, equity_yield=0.14,
                             appreciation=pv.AppreciationSpec(asset_change=0.10))
print("\nmortgage-equity rate, 10-year hold, 25-year loan, 10% appreciation:")
print(f"  R                 = {result.rate:.6f}")
print(f"  C factor          = {result.c_factor:.6f}")
print(f"  mortgage constant = {result.mortgage_constant:.6f}")
print(f"  loan repaid by H  = {result.portion_paid:.6f}")
print(f"  regrouped (band)  = {result.akerson_rate:.6f}")

value = pv.capitalize(noi, result.rate)
print(f"  V = NOI/R         = {value:,.2f}")

# With income changing over the hold, the rate deflates by 1 + delta*J.
spec = pv.AppreciationSpec(asset_change=0.10, income_change=0.20)
with_j = pv.ellwood_j_cap_rate(terms, 0.14, spec)
print(f"\nsame deal, income up 20% over the hold: R = {with_j.rate:.6f} (J = {with_j.j_factor:.6f})")

# Three recovery premises for a 10-year wasting income at 10%.
print("\ncap rates by capital-recovery premise, i = 10%, n = 10:")
for method, extra in (("ring", {}), ("hoskold", {"safe_rate": 0.05}), ("annuity", {})):
    rate = pv.recovery_cap_rate(method, 0.10, 10, **extra)
    print(f"  {method:<8} R = {rate:.4f}  -> V = {pv.capitalize(noi, rate):,.2f}")
