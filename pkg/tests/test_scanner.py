"""Scanner: exhaustive class enumeration, scans, claims, determinism."""

from fractions import Fraction

import pytest

from nisets.engine import Engine
from nisets.families import FamilySpec, build
from nisets.formats import from_graph6, to_graph6
from nisets.graphs import canonical_code, is_good_graph
from nisets.scanner import (
    RouteDisagreement,
    conjecture_scan,
    has_inequality_violations,
    labeled_graph_classes,
    path_cycle_unions,
    scan_graphs,
    scan_trees,
    spot_check_trees,
    verify_claims,
)

GRAPH_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


class TestClassEnumeration:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_class_counts_and_orbit_sizes(self, n):
        classes = labeled_graph_classes(n)
        assert len(classes) == GRAPH_CLASS_COUNTS[n]
        assert sum(count for _, count in classes) == 1 << (n * (n - 1) // 2)

    def test_representatives_are_pairwise_non_isomorphic(self):
        for n in range(2, 6):
            codes = [canonical_code(g) for g, _ in labeled_graph_classes(n)]
            assert len(set(codes)) == len(codes)

    def test_tree_classes_match_free_tree_counts(self):
        from nisets.graphs import is_tree
        from nisets.trees import count_free_trees

        for n in range(1, 7):
            trees = [g for g, _ in labeled_graph_classes(n) if is_tree(g)]
            assert len(trees) == count_free_trees(n)

    def test_order_limit(self):
        with pytest.raises(ValueError, match="exhaustive limit"):
            labeled_graph_classes(8)


class TestGraphScans:
    def test_max_at_six_is_single_edge_class(self):
        report = scan_graphs(6, "non-edgeless", "av1")
        assert report.max_value == 4 and report.max_count == 1
        witness = from_graph6(report.max_witnesses[0])
        assert canonical_code(witness) == canonical_code(build(FamilySpec("G_special", 6)))

    def test_min_is_two_with_good_witnesses(self):
        report = scan_graphs(5, "non-edgeless", "av1", witness_cap=None)
        assert report.min_value == 2
        good = [g6 for g6 in report.min_witnesses]
        for g6 in good:
            assert is_good_graph(from_graph6(g6))

    def test_ratio_minimum_small_population(self):
        # order-4 graphs with no isolated vertex and max degree 2:
        # P4 (5/8), C4 (4/7) and P2+P2 (2/3); the cycle attains the minimum
        report = scan_graphs(4, "no-isolated-max-deg-2", "sigma-ratio")
        assert report.min_value == Fraction(4, 7)
        assert canonical_code(from_graph6(report.min_witnesses[0])) == canonical_code(
            build(FamilySpec("cycle", 4)))

    def test_edgeless_excluded_from_average_objective(self):
        report = scan_graphs(3, "all", "av1")
        assert report.min_value >= 2

    def test_unknown_filter_and_objective(self):
        with pytest.raises(ValueError, match="filter"):
            scan_graphs(4, "planar", "av1")
        with pytest.raises(ValueError, match="objective"):
            scan_graphs(4, "all", "entropy")


class TestTreeScans:
    def test_star_minimizes_at_nine(self):
        report = scan_trees(9, "av1")
        assert report.min_value == 2 and report.min_count == 1
        witness = from_graph6(report.min_witnesses[0])
        assert witness.max_degree() == 8

    def test_max_at_four(self):
        report = scan_trees(4, "av1")
        assert report.max_value == Fraction(12, 5)

    def test_band_at_ten(self):
        report = scan_trees(10, "av1")
        assert Fraction(5) < report.max_value < Fraction(11, 2)

    def test_deterministic_across_runs_and_workers(self):
        one = scan_trees(11, "av1", workers=1, spot_check_rate=0.05, seed=9)
        again = scan_trees(11, "av1", workers=1, spot_check_rate=0.05, seed=9)
        two = scan_trees(11, "av1", workers=2, spot_check_rate=0.05, seed=9)
        assert one == again == two

    def test_order_limits(self):
        with pytest.raises(ValueError, match="2..24"):
            scan_trees(1)
        with pytest.raises(ValueError, match="2..24"):
            scan_trees(25)

    def test_spot_checks_run(self):
        assert spot_check_trees(8, 1.0) == 23
        assert spot_check_trees(8, 0.0) == 0


class TestPathCycleUnions:
    def test_order_four_population(self):
        combos = {tuple(sorted(combo)) for combo, _ in path_cycle_unions(4)}
        assert combos == {
            (("path", 4),),
            (("path", 2), ("path", 2)),
            (("cycle", 4),),
        }

    def test_all_members_satisfy_the_filter(self):
        from nisets.graphs import structural_predicates

        for n in range(2, 9):
            for _, graph in path_cycle_unions(n):
                s = structural_predicates(graph)
                assert not s.has_isolated_vertex and s.max_degree <= 2
                assert graph.n == n

    def test_matches_exhaustive_classes(self):
        # the structured generator agrees with the brute-force class scan
        from nisets.scanner import _graph_class_records, _matches_filter

        for n in range(2, 8):
            structured = len(list(path_cycle_unions(n)))
            brute = sum(1 for rec in _graph_class_records(n)
                        if _matches_filter(rec, "no-isolated-max-deg-2"))
            assert structured == brute


@pytest.fixture(scope="module")
def reports():
    return verify_claims(max_tree_order=10, max_graph_order=5,
                         max_ratio_order=8, max_family_order=20)


class TestClaims:

    def test_no_inequality_violations(self, reports):
        assert not has_inequality_violations(reports)

    def test_recorded_discrepancies_present(self, reports):
        flagged = {(r.claim_id, r.order)
                   for r in reports for v in r.violations if v.equality_claim}
        assert ("tree-average-cap", 4) in flagged
        assert ("subdivided-star-band", 6) in flagged

    def test_one_report_per_claim_and_order(self, reports):
        seen = {(r.claim_id, r.order) for r in reports}
        assert len(seen) == len(reports)

    def test_selected_claims_only(self):
        reports = verify_claims(claims=["tree-average-lower"], max_tree_order=8)
        assert {r.claim_id for r in reports} == {"tree-average-lower"}
        assert all(r.status == "pass" for r in reports)

    def test_unknown_claim_rejected(self):
        with pytest.raises(ValueError, match="unknown claims"):
            verify_claims(claims=["flux-capacitor"])

    def test_order_caps_enforced(self):
        with pytest.raises(ValueError, match="exhaustive limit"):
            verify_claims(max_graph_order=8)
        with pytest.raises(ValueError, match="1..24"):
            verify_claims(max_tree_order=25)

    def test_reports_are_deterministic(self, reports):
        again = verify_claims(max_tree_order=10, max_graph_order=5,
                              max_ratio_order=8, max_family_order=20)
        assert reports == again

    def test_json_shape(self, reports):
        d = reports[0].to_json_dict()
        for key in ("claim_id", "population", "order", "status", "extremal",
                    "witnesses", "violations"):
            assert key in d
        assert set(d["extremal"]) == {"min", "max"}


class TestConjecture:
    def test_small_orders(self):
        records = conjecture_scan(range(4, 9))
        by_order = {rec.order: rec for rec in records}
        assert by_order[4].subdivided_star_is_unique_max
        assert by_order[4].max_value == Fraction(12, 5)
        # at order 6 another tree ties the subdivided star, so not unique
        assert not by_order[6].subdivided_star_is_unique_max
        assert by_order[6].max_value == by_order[6].subdivided_star_value == 3
        assert len(by_order[6].max_witnesses) == 2
        for n in (5, 7, 8):
            assert by_order[n].subdivided_star_is_unique_max

    def test_top_list_is_sorted(self):
        (record,) = conjecture_scan([9], top_k=5)
        values = [v for _, v in record.top]
        assert values == sorted(values, reverse=True)
        assert len(record.top) == 5
        assert record.top[0][1] == record.max_value

    def test_order_floor(self):
        with pytest.raises(ValueError, match=">= 4"):
            conjecture_scan([3])


def test_spot_check_catches_disagreement(monkeypatch):
    import nisets.scanner as scanner_module

    class Liar:
        def __init__(self, graph):
            self.graph = graph

        def scalars0(self):
            return (1, 1)

        def scalars1(self):
            return (1, 1)

    monkeypatch.setattr(scanner_module, "Engine", Liar)
    with pytest.raises(RouteDisagreement):
        spot_check_trees(5, 1.0)
