import json

import numpy as np
import pytest

from propval import (
    Project,
    compare_pairwise,
    comparison_table,
    comparison_to_dict,
    irr_all,
    load_project,
    negate,
    npv,
    npv_slope_class,
    profitability_test,
    project_from_dict,
)

from oracles import npv_oracle, sign_scan_root_count


class TestNpv:
    def test_table_values_for_a(self, project_a):
        assert npv(project_a, 0.10) == pytest.approx(248.69, abs=0.005)
        assert npv(project_a, 0.12) == pytest.approx(192.15, abs=0.005)

    def test_zero_at_own_rate_for_c(self, project_c):
        assert npv(project_c, 0.12) == pytest.approx(0.0, abs=0.005)
        assert npv(project_c, 0.10) == pytest.approx(49.74, abs=0.005)

    def test_matches_oracle_on_random_flows(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            flows = tuple(rng.uniform(-2000, 2000, size=rng.integers(2, 9)))
            project = Project("p", flows)
            rate = float(rng.uniform(-0.9, 2.0))
            assert npv(project, rate) == pytest.approx(npv_oracle(flows, rate), rel=1e-12, abs=1e-9)

    def test_rejects_rate_at_minus_one(self, project_a):
        with pytest.raises(ValueError):
            npv(project_a, -1.0)

    def test_project_needs_two_flows(self):
        with pytest.raises(ValueError):
            Project("x", (100.0,))


class TestIrrAll:
    def test_project_a_single_root(self, project_a):
        result = irr_all(project_a)
        assert result.classification == "unique"
        assert result.roots[0] == pytest.approx(0.20, abs=5e-5)

    def test_project_b_single_root(self, project_b):
        result = irr_all(project_b)
        assert result.classification == "unique"
        assert result.roots[0] == pytest.approx(0.2338, abs=5e-5)

    def test_project_d_double_root(self, project_d):
        result = irr_all(project_d)
        assert result.classification == "multiple"
        assert len(result.roots) == 2
        assert result.roots[0] == pytest.approx(0.2852, abs=5e-5)
        assert result.roots[1] == pytest.approx(0.3934, abs=5e-5)

    def test_lowered_payout_has_no_root(self):
        project = Project("D'", (-1000, 1450, 1450, -2200))
        result = irr_all(project)
        assert result.classification == "none"
        assert result.roots == ()

    def test_roots_zero_the_npv(self, project_a, project_b, project_d):
        for project in (project_a, project_b, project_d):
            for root in irr_all(project).roots:
                assert abs(npv(project, root)) < 1e-6 * project.gross

    def test_roots_strictly_increasing(self, project_d):
        roots = irr_all(project_d).roots
        assert all(a < b for a, b in zip(roots, roots[1:]))

    def test_bounds_are_respected(self, project_a):
        result = irr_all(project_a, bounds=(-0.5, 0.1))
        assert result.classification == "none"
        assert result.search_bounds == (-0.5, 0.1)

    def test_matches_dense_scan_on_fixtures(self, project_a, project_b, project_c, project_d):
        fixtures = [project_a, project_b, project_c, project_d,
                    negate(project_a), Project("D'", (-1000, 1450, 1450, -2200))]
        for project in fixtures:
            expected = sign_scan_root_count(project.cashflows, -0.999, 10.0)
            assert len(irr_all(project).roots) == expected

    def test_matches_dense_scan_on_random_projects(self):
        rng = np.random.default_rng(20260810)
        bounds = (-0.9, 1.5)
        for _ in range(500):
            flows = tuple(rng.uniform(-2000, 2000, size=4))
            project = Project("p", flows)
            result = irr_all(project, bounds=bounds)
            assert len(result.roots) == sign_scan_root_count(flows, *bounds)
            for root in result.roots:
                assert abs(npv(project, root)) < 1e-6 * project.gross

    def test_rejects_all_zero_project(self):
        with pytest.raises(ValueError):
            irr_all(Project("z", (0.0, 0.0, 0.0)))


class TestNegate:
    def test_negated_a_from_table(self, project_a):
        minus_a = negate(project_a)
        assert minus_a.cashflows == (1000, -200, -200, -1200)
        result = irr_all(minus_a)
        assert result.roots[0] == pytest.approx(0.20, abs=5e-5)
        assert npv(minus_a, 0.10) == pytest.approx(-248.69, abs=0.005)
        assert npv(minus_a, 0.12) == pytest.approx(-192.15, abs=0.005)

    def test_involution(self, project_b):
        assert negate(negate(project_b)) == project_b

    def test_npv_flips_sign(self, project_a):
        for rate in (0.0, 0.10, 0.25):
            assert npv(negate(project_a), rate) == pytest.approx(-npv(project_a, rate), rel=1e-12)

    def test_roots_coincide(self, project_d):
        ours = irr_all(project_d).roots
        theirs = irr_all(negate(project_d)).roots
        assert len(ours) == len(theirs)
        for a, b in zip(ours, theirs):
            assert a == pytest.approx(b, abs=1e-9)


class TestNpvSlopeClass:
    def test_simple_investment_is_decreasing(self, project_a):
        assert npv_slope_class(project_a) == "decreasing"

    def test_two_sign_changes_not_guaranteed(self, project_d):
        assert npv_slope_class(project_d) == "not_guaranteed"

    def test_difference_project_is_decreasing(self):
        assert npv_slope_class(Project("A-B", (0, -300, -300, 700))) == "decreasing"

    def test_positive_first_not_guaranteed(self, project_a):
        assert npv_slope_class(negate(project_a)) == "not_guaranteed"

    def test_single_sign_not_guaranteed(self):
        assert npv_slope_class(Project("gift", (0, 100, 100))) == "not_guaranteed"


class TestProfitability:
    def test_a_profitable_below_irr(self, project_a):
        assert profitability_test(project_a, 0.10) == "profitable"

    def test_negated_project_is_inapplicable(self, project_a):
        assert profitability_test(negate(project_a), 0.10) == "inapplicable"

    def test_boundary_counts_as_unprofitable(self, project_c):
        assert profitability_test(project_c, 0.12) == "unprofitable"

    def test_above_irr_unprofitable(self, project_a):
        assert profitability_test(project_a, 0.25) == "unprofitable"

    def test_multiple_roots_inapplicable(self, project_d):
        assert profitability_test(project_d, 0.10) == "inapplicable"


class TestComparePairwise:
    def test_a_against_b(self, project_a, project_b):
        report = compare_pairwise(project_a, project_b)
        assert report.difference_project.cashflows == (0, -300, -300, 700)
        assert report.difference_project.name == "A-B"
        assert report.orientation_valid
        assert report.cutoff_rate == pytest.approx(0.1073, abs=5e-5)
        assert report.preferred_below == "A"
        assert report.preferred_above == "B"
        assert npv(report.difference_project, 0.10) == pytest.approx(5.26, abs=0.005)
        assert npv(report.difference_project, 0.12) == pytest.approx(-8.77, abs=0.005)

    def test_order_does_not_matter(self, project_a, project_b):
        report = compare_pairwise(project_b, project_a)
        assert report.difference_project.name == "A-B"
        assert report.preferred_below == "A"
        assert report.preferred_above == "B"

    def test_preference_flips_across_cutoff(self, project_a, project_b):
        report = compare_pairwise(project_a, project_b)
        cutoff = report.cutoff_rate
        below = npv(project_a, cutoff - 0.01) - npv(project_b, cutoff - 0.01)
        above = npv(project_a, cutoff + 0.01) - npv(project_b, cutoff + 0.01)
        assert below > 0 > above

    def test_identical_projects_degenerate(self, project_a):
        report = compare_pairwise(project_a, project_a)
        assert report.degenerate
        assert not report.orientation_valid
        assert report.cutoff_rate is None
        assert all(c == 0.0 for c in report.difference_project.cashflows)

    def test_unorientable_pair(self):
        p1 = Project("p1", (-100, 300, -100, 50))
        p2 = Project("p2", (-100, 50, 160, 40))
        report = compare_pairwise(p1, p2)
        assert not report.orientation_valid
        assert report.cutoff_rate is None

    def test_zero_pads_shorter_project(self, project_a):
        shorter = Project("S", (-1000, 200, 200))
        report = compare_pairwise(project_a, shorter)
        assert len(report.difference_project.cashflows) == 4

    def test_highest_irr_fallacy_regression(self, project_a, project_b):
        # B has the higher IRR yet A has the higher NPV at 10%
        assert irr_all(project_b).roots[0] > irr_all(project_a).roots[0]
        assert npv(project_a, 0.10) > npv(project_b, 0.10)


class TestIngestionAndReports:
    def test_load_project(self, tmp_path, project_a):
        path = tmp_path / "a.json"
        path.write_text(json.dumps({"name": "A", "cashflows": [-1000, 200, 200, 1200]}))
        assert load_project(str(path)) == project_a

    def test_from_dict_validations(self):
        with pytest.raises(ValueError):
            project_from_dict({"name": "x", "cashflows": [1.0]})
        with pytest.raises(ValueError):
            project_from_dict({"name": "x", "cashflows": [0, 0.0]})
        with pytest.raises(ValueError):
            project_from_dict({"name": "x", "cashflows": [1, "two"]})
        with pytest.raises(ValueError):
            project_from_dict({"name": "", "cashflows": [1, 2]})
        with pytest.raises(ValueError):
            project_from_dict([1, 2])

    def test_comparison_table_frozen(self, project_a, project_b):
        report = compare_pairwise(project_a, project_b)
        text = comparison_table(report)
        expected = (
            "Project  C0        C1       C2       C3       IRR     NPV @ 10.00%  NPV @ 12.00%\n"
            "A        -1000.00  200.00   200.00   1200.00  20.00%  248.69        192.15\n"
            "B        -1000.00  500.00   500.00   500.00   23.38%  243.43        200.92\n"
            "A-B      0.00      -300.00  -300.00  700.00   10.73%  5.26          -8.77\n"
            "cutoff rate: 10.73%\n"
            "preferred below cutoff: A\n"
            "preferred above cutoff: B\n"
        )
        assert text == expected

    def test_comparison_dict_raw_doubles(self, project_a, project_b):
        data = comparison_to_dict(compare_pairwise(project_a, project_b), (0.10,))
        assert data["schema"] == 1
        assert data["cutoff_rate"] == pytest.approx(0.10727512693405156, abs=1e-9)
        assert data["projects"][0]["npv"]["0.1"] == npv(project_a, 0.10)
        assert data["preferred_below"] == "A"

    def test_degenerate_table_mentions_it(self, project_a):
        text = comparison_table(compare_pairwise(project_a, project_a))
        assert "degenerate" in text
