import numpy as np
import pytest

from propval import (
    AppreciationSpec,
    MortgageTerms,
    adjusted_cap_rate,
    annuity_pv,
    band_of_investment,
    band_with_mortgage_constant,
    capitalize,
    ellwood_cap_rate,
    ellwood_j_cap_rate,
    hoskold_stream_value,
    mortgage_constant,
    perpetuity_value,
    rate_from,
    sinking_fund_factor,
    recovery_cap_rate,
)

from oracles import accumulation_sum, annuity_sum, stream_pv


def mortgage_balance_equation_residual(noi, value, terms, equity_yield, asset_change, rm, bal):
    """Discounted equity cash flows plus loan face value, minus the value.

    value = a(H,Y) * (noi - M*value*rm)
            + (1+Y)^-H * ((1+change)*value - M*value*bal) + M*value
    """
    m, h = terms.loan_to_value, terms.holding_years
    equity_income = annuity_sum(equity_yield, h) * (noi - m * value * rm)
    reversion = ((1 + asset_change) * value - m * value * bal) / (1 + equity_yield) ** h
    return value - (equity_income + reversion + m * value)


class TestPerpetuityAndIrv:
    def test_limit_of_long_annuity(self):
        assert perpetuity_value(100, 0.10) == 1000.0
        assert abs(perpetuity_value(100, 0.10) - 100 * annuity_sum(0.10, 200)) < 0.01

    def test_zero_income(self):
        assert perpetuity_value(0, 0.05) == 0.0

    def test_unit_rate(self):
        assert perpetuity_value(1, 1.0) == 1.0

    def test_rejects_nonpositive_rate(self):
        with pytest.raises(ValueError):
            perpetuity_value(100, 0.0)
        with pytest.raises(ValueError):
            perpetuity_value(100, -0.05)

    def test_capitalize_basic(self):
        assert capitalize(120, 0.12) == pytest.approx(1000.0, rel=1e-12)
        assert capitalize(0, 0.1) == 0.0

    def test_capitalize_with_annuity_rate(self):
        rate = 1.0 / annuity_pv(0.10, 5)
        assert capitalize(100, rate) == pytest.approx(100 * annuity_sum(0.10, 5), rel=1e-12)

    def test_round_trip(self):
        for income, rate in [(120, 0.12), (85.5, 0.0735), (40, -0.02)]:
            assert rate_from(capitalize(income, rate), income) == pytest.approx(rate, rel=1e-12)

    def test_rejects_zero_divisors(self):
        with pytest.raises(ValueError):
            capitalize(100, 0.0)
        with pytest.raises(ValueError):
            rate_from(0.0, 100)


class TestAdjustedCapRate:
    def test_no_change_gives_discount_rate(self):
        assert adjusted_cap_rate(0.10, 10, 0.0) == pytest.approx(0.10, rel=1e-12)

    def test_total_waste_gives_full_load(self):
        assert adjusted_cap_rate(0.10, 10, -1.0) == pytest.approx(
            1.0 / annuity_pv(0.10, 10), rel=1e-12
        )

    def test_appreciation_unloads(self):
        expected = 0.10 - 0.5 * sinking_fund_factor(0.10, 10)
        assert adjusted_cap_rate(0.10, 10, 0.5) == pytest.approx(expected, rel=1e-12)

    def test_fixed_point_of_value_equation(self):
        # V = I/R* must equal PV of 10 incomes plus the 1.5V reversion
        income, i, n, change = 100.0, 0.10, 10, 0.5
        value = capitalize(income, adjusted_cap_rate(i, n, change))
        direct = income * annuity_sum(i, n) + (1 + change) * value / (1 + i) ** n
        assert abs(value - direct) < 1e-8 * value

    def test_strictly_decreasing_in_change(self):
        rates = [adjusted_cap_rate(0.08, 12, delta) for delta in np.linspace(-1, 1, 21)]
        assert all(a > b for a, b in zip(rates, rates[1:]))


class TestBandOfInvestment:
    def test_all_equity(self):
        assert band_of_investment(0.0, 0.08, 0.12) == 0.12

    def test_all_debt(self):
        assert band_of_investment(1.0, 0.08, 0.12) == 0.08

    def test_weighted_blend(self):
        assert band_of_investment(0.7, 0.08, 0.12) == pytest.approx(0.092, rel=1e-12)

    def test_value_equation_balances(self):
        # V = (NOI - M*V*i)/Y + M*V with V = NOI/R
        noi, m, i, y = 100.0, 0.7, 0.08, 0.12
        value = capitalize(noi, band_of_investment(m, i, y))
        assert abs(value - ((noi - m * value * i) / y + m * value)) < 1e-8 * value

    def test_resale_after_hold_gives_same_rate(self):
        # interest-only loan, asset sold at unchanged value after the hold:
        # V = a(H,Y)(NOI - M*V*i) + (1+Y)^-H (V - MV) + MV balances with
        # the same blended rate
        noi, m, i, y, hold = 100.0, 0.7, 0.08, 0.12, 10
        value = capitalize(noi, band_of_investment(m, i, y))
        equity_income = annuity_sum(y, hold) * (noi - m * value * i)
        reversion = (value - m * value) / (1 + y) ** hold
        assert abs(value - (equity_income + reversion + m * value)) < 1e-8 * value

    def test_rejects_bad_ltv(self):
        with pytest.raises(ValueError):
            band_of_investment(1.2, 0.08, 0.12)


class TestBandWithMortgageConstant:
    def test_all_equity(self):
        assert band_with_mortgage_constant(0.0, 0.10, 0.13) == 0.13

    def test_all_debt(self):
        assert band_with_mortgage_constant(1.0, 0.10, 0.13) == 0.10

    def test_weighted_blend(self):
        assert band_with_mortgage_constant(0.6, 0.0966, 0.13) == pytest.approx(
            0.6 * 0.0966 + 0.4 * 0.13, rel=1e-12
        )

    def test_value_equation_with_full_amortization(self):
        # loan amortizes over the hold; resale nets to V - MV
        noi, m, i, y, hold = 100.0, 0.6, 0.09, 0.13, 10
        rm = mortgage_constant(i, 12 * hold)
        value = capitalize(noi, band_with_mortgage_constant(m, rm, y))
        equity_income = annuity_sum(y, hold) * (noi - m * value * rm)
        reversion = (value - m * value) / (1 + y) ** hold
        assert abs(value - (equity_income + reversion + m * value)) < 1e-8 * value


class TestMortgageConstant:
    def test_zero_rate(self):
        assert mortgage_constant(0.0, 120) == pytest.approx(0.1, rel=1e-12)

    def test_one_year_loan(self):
        assert mortgage_constant(0.12, 12) == pytest.approx(
            12 * (0.01 / (1 - 1.01 ** (-12))), rel=1e-12
        )

    def test_against_monthly_annuity_oracle(self):
        assert mortgage_constant(0.09, 300) == pytest.approx(
            12 / annuity_sum(0.09 / 12, 300), rel=1e-12
        )


class TestEllwoodCapRate:
    def test_unlevered_no_change_is_equity_yield(self):
        terms = MortgageTerms(0.0, 0.09, 300, 10)
        result = ellwood_cap_rate(terms, 0.14, AppreciationSpec(0.0))
        assert result.rate == pytest.approx(0.14, rel=1e-12)
        assert result.akerson_rate == pytest.approx(0.14, rel=1e-12)

    def test_full_amortization_with_matching_depreciation(self):
        # paid off at resale and value falls by the loan share: the band
        # of investment rate with the mortgage constant
        terms = MortgageTerms(0.6, 0.09, 120, 10)
        result = ellwood_cap_rate(terms, 0.13, AppreciationSpec(asset_change=-0.6))
        rm = mortgage_constant(0.09, 120)
        assert result.rate == pytest.approx(band_with_mortgage_constant(0.6, rm, 0.13), rel=1e-10)
        assert result.portion_paid == pytest.approx(1.0, abs=1e-12)

    def test_worked_case_round_trip(self):
        noi = 100.0
        terms = MortgageTerms(0.7, 0.09, 300, 10)
        result = ellwood_cap_rate(terms, 0.14, AppreciationSpec(asset_change=0.1))
        value = capitalize(noi, result.rate)
        residual = mortgage_balance_equation_residual(
            noi, value, terms, 0.14, 0.1, result.mortgage_constant, result.balance_fraction
        )
        assert abs(residual) < 1e-8 * value

    def test_akerson_regrouping_matches(self):
        rng = np.random.default_rng(3)
        for _ in range(1000):
            hold = int(rng.integers(1, 31))
            terms = MortgageTerms(
                float(rng.uniform(0, 0.95)),
                float(rng.uniform(0.01, 0.15)),
                12 * hold + int(rng.integers(0, 361)),
                hold,
            )
            spec = AppreciationSpec(asset_change=float(rng.uniform(-0.9, 1.0)))
            y = float(rng.uniform(0.03, 0.25))
            result = ellwood_cap_rate(terms, y, spec)
            assert abs(result.rate - result.akerson_rate) < 1e-12

    def test_balance_uses_monthly_loan(self):
        terms = MortgageTerms(0.7, 0.09, 300, 10)
        result = ellwood_cap_rate(terms, 0.14, AppreciationSpec())
        expected_bal = annuity_sum(0.0075, 180) / annuity_sum(0.0075, 300)
        assert result.balance_fraction == pytest.approx(expected_bal, rel=1e-10)

    def test_unlevered_collapses_to_adjusted_rate(self):
        # no debt: the mortgage-equity rate is just the value-change rate
        terms = MortgageTerms(0.0, 0.09, 300, 10)
        result = ellwood_cap_rate(terms, 0.14, AppreciationSpec(asset_change=0.3))
        assert result.rate == pytest.approx(adjusted_cap_rate(0.14, 10, 0.3), rel=1e-12)

    def test_rejects_hold_beyond_amortization(self):
        with pytest.raises(ValueError):
            MortgageTerms(0.7, 0.09, 60, 10)


class TestEllwoodJCapRate:
    def test_no_income_change_matches_constant_income(self):
        terms = MortgageTerms(0.7, 0.09, 300, 10)
        plain = ellwood_cap_rate(terms, 0.14, AppreciationSpec(asset_change=0.1))
        with_j = ellwood_j_cap_rate(terms, 0.14, AppreciationSpec(asset_change=0.1, income_change=0.0))
        assert with_j.rate == pytest.approx(plain.rate, rel=1e-12)

    def test_pure_income_premise_rate(self):
        # unlevered wasting asset with fully changing income
        terms = MortgageTerms(0.0, 0.09, 300, 10)
        spec = AppreciationSpec(asset_change=-1.0, income_change=1.0)
        result = ellwood_j_cap_rate(terms, 0.14, spec)
        y = 0.14
        expected = (y + sinking_fund_factor(y, 10)) / (1.0 + result.j_factor)
        assert result.rate == pytest.approx(expected, rel=1e-12)

    def test_worked_case_round_trip_with_stream_oracle(self):
        noi = 100.0
        y, hold = 0.14, 10
        terms = MortgageTerms(0.7, 0.09, 300, hold)
        spec = AppreciationSpec(asset_change=0.1, income_change=0.2)
        result = ellwood_j_cap_rate(terms, y, spec)
        value = capitalize(noi, result.rate)
        # discount the changing income net of debt service, add reversion
        # net of the loan balance, plus the loan face value
        h = noi * spec.income_change / accumulation_sum(y, hold)
        incomes = [noi + accumulation_sum(y, k) * h for k in range(1, hold + 1)]
        debt_service = terms.loan_to_value * value * result.mortgage_constant
        equity = stream_pv([inc - debt_service for inc in incomes], y)
        reversion = (
            (1 + spec.asset_change) * value
            - terms.loan_to_value * value * result.balance_fraction
        ) / (1 + y) ** hold
        direct = equity + reversion + terms.loan_to_value * value
        assert abs(value - direct) < 1e-8 * value


class TestRecoveryMethods:
    def test_ring(self):
        assert recovery_cap_rate("ring", 0.10, 10) == pytest.approx(0.20, rel=1e-12)

    def test_annuity(self):
        assert recovery_cap_rate("annuity", 0.10, 10) == pytest.approx(
            1.0 / annuity_pv(0.10, 10), rel=1e-12
        )

    def test_hoskold_matches_stream_value(self):
        rate = recovery_cap_rate("hoskold", 0.10, 10, safe_rate=0.05)
        assert rate == pytest.approx(0.10 + sinking_fund_factor(0.05, 10), rel=1e-12)
        assert capitalize(100, rate) == pytest.approx(
            hoskold_stream_value(100, 0.10, 0.05, 10), rel=1e-12
        )

    def test_hoskold_requires_safe_rate(self):
        with pytest.raises(ValueError):
            recovery_cap_rate("hoskold", 0.10, 10)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            recovery_cap_rate("gordon", 0.10, 10)
