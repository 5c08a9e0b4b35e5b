"""Structural law checks and the aggregated verification report."""

import json
from fractions import Fraction

import pytest

from dimtools.checks import (
    Budgets,
    check_cycle_intersections,
    check_dim_bounds,
    check_dim_size_invariance,
    check_edge_bound,
    check_partition_regularity,
    full_report,
    regular_dim_formula,
    three_coloring_from_dim,
)
from dimtools.corpus import sample_connected_graphs
from dimtools.families import cycle, complete, kneser_dim_partition, petersen, star
from dimtools.graph import build_graph
from dimtools.partition import find_dim_partition
from dimtools.solver import find_dim


def k4_minus_edge():
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


class TestThreeColoring:
    def test_single_edge(self):
        g = build_graph(2, [(0, 1)])
        assert three_coloring_from_dim(g, {0}).color_of == (1, 2)

    def test_c6_assignment(self):
        g = cycle(6)
        dim = {g.edge_id(0, 1), g.edge_id(3, 4)}
        coloring = three_coloring_from_dim(g, dim)
        assert coloring.color_of == (1, 2, 3, 1, 2, 3)

    def test_petersen_proper(self):
        g = petersen()
        coloring = three_coloring_from_dim(g, find_dim(g))
        for u, v in g.edges:
            assert coloring.color_of[u] != coloring.color_of[v]
        assert set(coloring.color_of) <= {1, 2, 3}

    def test_rejects_non_dim(self):
        with pytest.raises(ValueError):
            three_coloring_from_dim(cycle(6), {0})


class TestEdgeBound:
    def test_k4_minus_edge_equality(self):
        res = check_edge_bound(k4_minus_edge())
        assert res.applicable and res.holds
        assert res.bound == Fraction(5)

    def test_petersen(self):
        res = check_edge_bound(petersen())
        assert res.applicable and res.holds
        assert res.bound == Fraction(55, 2)

    def test_c4_not_applicable(self):
        res = check_edge_bound(cycle(4))
        assert not res.applicable


class TestSizeInvariance:
    @pytest.mark.parametrize("g", [cycle(6), complete(3), petersen()])
    def test_true_on_examples(self, g):
        assert check_dim_size_invariance(g)


class TestRegularFormula:
    def test_petersen_parameters(self):
        assert regular_dim_formula(10, 3) == 3

    def test_c6_parameters(self):
        assert regular_dim_formula(6, 2) == 2

    def test_six_vertex_cubic_absent(self):
        assert regular_dim_formula(6, 3) is None
        # cross-check: neither 3-regular graph on 6 vertices has a DIM
        k33 = build_graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
        prism = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                                (0, 3), (1, 4), (2, 5)])
        assert find_dim(k33) is None
        assert find_dim(prism) is None

    def test_k2_parameters(self):
        assert regular_dim_formula(2, 1) == 1

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            regular_dim_formula(0, 1)


class TestDimBounds:
    def test_c6_equality(self):
        res = check_dim_bounds(cycle(6))
        assert res.applicable and res.lower_ok and res.upper_ok

    def test_petersen_equality(self):
        res = check_dim_bounds(petersen())
        assert res.applicable and res.lower_ok and res.upper_ok

    def test_star_not_applicable(self):
        res = check_dim_bounds(star(3))
        assert not res.applicable


class TestCycleIntersections:
    def test_c9_meets_its_dim_three_times(self):
        g = cycle(9)
        dim = find_dim(g)
        res = check_cycle_intersections(g, dim, 9)
        assert res.all_bound_ok and res.all_parity_ok and res.short_cycle_ok
        assert res.cycles_checked == 1

    def test_petersen_every_five_cycle_once(self):
        g = petersen()
        res = check_cycle_intersections(g, find_dim(g), 5)
        assert res.cycles_checked == 12
        assert res.short_cycle_ok and res.all_bound_ok and res.all_parity_ok

    def test_k4_minus_edge_four_cycle_avoided(self):
        g = k4_minus_edge()
        dim = {g.edge_id(0, 1)}
        res = check_cycle_intersections(g, dim, 4)
        assert res.all_bound_ok and res.all_parity_ok and res.short_cycle_ok

    def test_rejects_invalid_dim(self):
        with pytest.raises(ValueError):
            check_cycle_intersections(cycle(6), {0}, 6)


class TestPartitionRegularity:
    def test_c6(self):
        g = cycle(6)
        assert check_partition_regularity(g, find_dim_partition(g))

    def test_star(self):
        g = star(3)
        assert check_partition_regularity(g, find_dim_partition(g))

    def test_petersen(self):
        lg, p = kneser_dim_partition(3)
        assert check_partition_regularity(lg.graph, p)

    def test_disconnected_rejected(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        p = find_dim_partition(g)
        with pytest.raises(ValueError):
            check_partition_regularity(g, p)


class TestFullReport:
    def test_petersen_everything_passes(self):
        report = full_report(petersen())
        assert report.dim_exists and report.dim_size == 3
        assert report.all_passed
        assert report.entry("kneser-extremal-case").passed

    def test_c4_not_applicable_entries(self):
        report = full_report(cycle(4))
        assert not report.dim_exists and report.dim_size is None
        for entry in report.entries:
            assert not entry.applicable
        assert report.all_passed  # nothing failed, nothing applied

    def test_c9_partition_found(self):
        report = full_report(cycle(9))
        assert report.all_passed
        assert report.entry("partition-regularity").applicable
        assert report.entry("partition-regularity").details == "classes 3"

    def test_budget_exhaustion_is_recorded_not_raised(self):
        report = full_report(petersen(), Budgets(search_nodes=1))
        assert report.dim_search_error is not None
        assert not report.dim_exists

    def test_text_round_stability(self):
        a = full_report(petersen()).to_text()
        b = full_report(petersen()).to_text()
        assert a == b
        assert a.startswith("dim verification report\n[graph]\nvertices = 10\n")

    def test_json_mirrors_fields(self):
        report = full_report(cycle(6))
        data = json.loads(json.dumps(report.as_dict()))
        assert data["graph"]["vertices"] == 6
        assert data["dim"]["size"] == 2
        names = [c["name"] for c in data["checks"]]
        assert "three-coloring" in names and "list-properties" in names

    def test_sampled_graphs_have_no_violations(self):
        for g in sample_connected_graphs(7, 120, seed=5):
            report = full_report(g)
            for entry in report.entries:
                assert entry.passed or not entry.applicable, (g.edges, entry)
