"""Minimum leaf number, the prism leaf-reduction construction, traceability
thresholds, and the smallest-PH-power bound and probe."""

import pytest

from prismph import (
    BudgetExceeded,
    Graph,
    LeafTree,
    SearchBudget,
    complete_graph,
    cycle_graph,
    hypercube_graph,
    is_traceable,
    min_leaf_number,
    path_graph,
    ph_power_exact,
    ph_power_upper_bound,
    prism,
    prism_leaf_reduction,
    prism_leaf_reduction_steps,
    star_graph,
    traceable_threshold,
)

from helpers import connected_atlas, exhaustive_min_leaf, spider_graph


class TestLeafTree:
    def test_validates_spanning_tree(self):
        LeafTree.from_edges(3, [(0, 1), (1, 2)])
        with pytest.raises(ValueError):
            LeafTree.from_edges(3, [(0, 1)])  # too few edges
        with pytest.raises(ValueError):
            LeafTree.from_edges(4, [(0, 1), (1, 2), (0, 2)])  # cycle, not spanning
        with pytest.raises(ValueError):
            LeafTree(3, ((0, 1), (1, 2)), leaf_count=3)  # wrong count

    def test_leaves(self):
        t = LeafTree.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert t.leaf_count == 3
        assert t.leaves == (1, 2, 3)


class TestMinLeafNumber:
    @pytest.mark.parametrize(
        "g,value",
        [
            (path_graph(5), 2),
            (cycle_graph(6), 2),
            (star_graph(4), 3),
            (star_graph(5), 4),
            (star_graph(6), 5),
            (spider_graph(), 3),
            (complete_graph(4), 2),
        ],
    )
    def test_frozen_values(self, g, value):
        r = min_leaf_number(g)
        assert r.exact and r.value == value
        assert r.witness.leaf_count == value
        assert set(r.witness.edges) <= set(g.edges)

    def test_prism_of_k15(self):
        r = min_leaf_number(prism(star_graph(6)).host)
        assert r.exact and r.value == 4

    def test_single_vertex(self):
        r = min_leaf_number(complete_graph(1))
        assert (r.value, r.exact) == (0, True)

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            min_leaf_number(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_vertex_cap(self):
        with pytest.raises(ValueError):
            min_leaf_number(cycle_graph(15))
        assert min_leaf_number(cycle_graph(15), vertex_cap=20).value == 2

    def test_budget_downgrades_to_upper_bound(self):
        g = prism(star_graph(6)).host
        r = min_leaf_number(g, max_nodes=1)
        assert not r.exact
        assert r.value >= 4
        assert r.witness.leaf_count == r.value

    def test_agrees_with_exhaustive_enumeration(self):
        for g in connected_atlas(6):
            assert min_leaf_number(g).value == exhaustive_min_leaf(g)

    def test_ml2_iff_traceable_up_to_seven(self):
        # single-vertex graph excluded: its one spanning tree has no leaves
        for g in connected_atlas(7):
            if g.n >= 2:
                assert (min_leaf_number(g).value == 2) == is_traceable(g)

    def test_json(self):
        d = min_leaf_number(star_graph(4)).to_json_dict()
        assert d["ml"] == 3 and d["exact"] is True
        assert sorted(map(tuple, d["witness_edges"])) == [(0, 1), (0, 2), (0, 3)]


class TestPrismLeafReduction:
    def test_k13_reduces_to_hamiltonian_path(self):
        g = star_graph(4)
        tree = min_leaf_number(g).witness
        steps = prism_leaf_reduction_steps(g, tree)
        assert steps[0].leaf_count == 4  # 2t-2 with t=3
        final = steps[-1]
        assert final.leaf_count == 2
        host = prism(g).host
        assert set(final.edges) <= set(host.edges)

    def test_intermediate_bound_and_final(self):
        cases = [star_graph(4), star_graph(5), star_graph(6), spider_graph()]
        for g in cases:
            tree = min_leaf_number(g).witness
            t = tree.leaf_count
            steps = prism_leaf_reduction_steps(g, tree)
            assert len(steps) == t
            host = prism(g).host
            for j, step in enumerate(steps):
                assert step.leaf_count <= 2 * t - 2 - j
                assert set(step.edges) <= set(host.edges)
            assert steps[-1].leaf_count <= t - 1

    def test_four_leg_spider(self):
        g = star_graph(5)  # spider with 4 unit legs, t = 4
        tree = min_leaf_number(g).witness
        final = prism_leaf_reduction(g, tree)
        assert final.leaf_count <= 3
        assert min_leaf_number(prism(g).host).value <= 3

    def test_requires_more_than_two_leaves(self):
        g = path_graph(4)
        tree = min_leaf_number(g).witness
        with pytest.raises(ValueError):
            prism_leaf_reduction_steps(g, tree)

    def test_requires_tree_of_host(self):
        tree = LeafTree.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        with pytest.raises(ValueError):
            prism_leaf_reduction_steps(cycle_graph(4), tree)

    def test_census_strict_decrease(self):
        for g in connected_atlas(6):
            r = min_leaf_number(g)
            if r.value <= 2:
                continue
            host = prism(g).host
            assert min_leaf_number(host).value < r.value


class TestThresholds:
    def test_traceable_graph_threshold_zero(self):
        assert traceable_threshold(path_graph(4)) == 0
        assert traceable_threshold(cycle_graph(5)) == 0

    def test_frozen_thresholds(self):
        assert traceable_threshold(star_graph(4)) == 1
        assert traceable_threshold(star_graph(5)) == 2
        assert traceable_threshold(star_graph(6)) == 3
        assert traceable_threshold(spider_graph()) == 1

    def test_upper_bounds(self):
        assert ph_power_upper_bound(path_graph(4)) == 5
        assert ph_power_upper_bound(star_graph(4)) == 6
        assert ph_power_upper_bound(cycle_graph(4)) == 5

    def test_disconnected_rejected(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(ValueError):
            traceable_threshold(g)
        with pytest.raises(ValueError):
            ph_power_upper_bound(g)


class TestPhPowerExact:
    def test_ph_graphs_report_zero(self):
        for g in (cycle_graph(4), complete_graph(4), hypercube_graph(3)):
            r = ph_power_exact(g, 2)
            assert (r.value, r.status) == (0, "found")
            assert r.levels_checked == (0,)

    def test_c6_not_found_within_one(self):
        r = ph_power_exact(cycle_graph(6), 1)
        assert (r.value, r.status) == (None, "not_found")
        assert r.levels_checked == (0, 1)

    def test_c6_budget_exceeded_beyond_cap(self):
        r = ph_power_exact(cycle_graph(6), 3)
        assert (r.value, r.status) == (None, "budget_exceeded")

    def test_k1_tower_reaches_q2(self):
        r = ph_power_exact(complete_graph(1), 3)
        assert (r.value, r.status) == (2, "found")

    def test_budget_verdict_propagates(self):
        r = ph_power_exact(hypercube_graph(3), 0, budget=SearchBudget(max_pairings=5))
        assert r.status == "budget_exceeded"

    def test_exact_below_upper_bound_when_found(self):
        for g in (cycle_graph(4), complete_graph(4), complete_graph(1)):
            r = ph_power_exact(g, 3)
            if r.status == "found":
                assert r.value <= ph_power_upper_bound(g)

    def test_lowered_cap_refuses_early(self):
        r = ph_power_exact(cycle_graph(6), 1, top_cap=8)
        assert r.status == "budget_exceeded"
        assert r.levels_checked == (0,)
