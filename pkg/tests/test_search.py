import random

import pytest

from conftest import complete_graph, cycle_graph, path_graph, star_graph
from ordsearch.graph import (
    DisconnectedGraphError,
    OrderedGraph,
    invert_permutation,
    random_connected_graph,
    relabel,
)
from ordsearch.predicates import is_traversal
from ordsearch.search import (
    alt_search,
    alt_search_with_counts,
    bfs_search,
    deterministic_search,
    least_neighbor_map,
    traversal_tree,
)


def brute_force_stage_simulation(g, start):
    """Reference implementation: recompute the frontier from scratch each
    stage by scanning all vertices, with no incremental state."""
    order = [start]
    while len(order) < g.vertex_count:
        frontier = [
            v
            for v in range(g.vertex_count)
            if v not in order and any(u in order for u in g.adjacency[v])
        ]
        if not frontier:
            return None
        order.append(min(frontier))
    return tuple(order)


class TestDeterministicSearch:
    def test_path_unique_choices(self):
        assert deterministic_search(path_graph(3)).visit_order == (0, 1, 2)

    def test_six_cycle_tail(self, six_cycle_tail):
        assert brute_force_stage_simulation(six_cycle_tail, 0) == (0, 1, 2, 4, 5, 3)
        assert deterministic_search(six_cycle_tail).visit_order == (0, 1, 2, 4, 5, 3)

    def test_zigzag_path(self):
        g = OrderedGraph(4, ((0, 3), (3, 1), (1, 2)))
        assert brute_force_stage_simulation(g, 0) == (0, 3, 1, 2)
        assert deterministic_search(g).visit_order == (0, 3, 1, 2)

    def test_matches_brute_force_on_random_graphs(self):
        rng = random.Random(21)
        for _ in range(60):
            g = random_connected_graph(rng.randint(1, 12), 0.35, rng.randint(0, 9999))
            start = rng.randrange(g.vertex_count)
            assert (
                deterministic_search(g, start).visit_order
                == brute_force_stage_simulation(g, start)
            )

    def test_trace_records_choice_per_stage(self, six_cycle_tail):
        trace = deterministic_search(six_cycle_tail)
        assert len(trace.stages) == 6
        for i, stage in enumerate(trace.stages):
            assert stage.chosen == trace.visit_order[i]
            assert stage.chosen in stage.frontier
            assert stage.chosen == min(stage.frontier)
        assert trace.stages[1].frontier == (1, 5)

    def test_stage_lines(self):
        trace = deterministic_search(path_graph(2))
        assert trace.stage_lines() == [
            "stage 0: pick 0 from {0}",
            "stage 1: pick 1 from {1}",
        ]

    def test_disconnected_reports_vertex(self):
        g = OrderedGraph(3, ((0, 1),))
        with pytest.raises(DisconnectedGraphError) as exc:
            deterministic_search(g)
        assert exc.value.vertex == 2

    def test_start_parameter(self, six_cycle_tail):
        assert deterministic_search(six_cycle_tail, 3).visit_order == (3, 5, 0, 1, 2, 4)
        assert brute_force_stage_simulation(six_cycle_tail, 3) == (3, 5, 0, 1, 2, 4)

    def test_bad_start(self):
        with pytest.raises(ValueError):
            deterministic_search(path_graph(2), 7)


class TestBfsSearch:
    def test_six_cycle_tail(self, six_cycle_tail):
        assert bfs_search(six_cycle_tail).visit_order == (0, 1, 5, 2, 3, 4)

    def test_relabeled_by_search_output(self, six_cycle_tail):
        tau = deterministic_search(six_cycle_tail).visit_order
        replayed = bfs_search(relabel(six_cycle_tail, tau)).visit_order
        mapped_back = tuple(tau[v] for v in replayed)
        assert mapped_back == (0, 1, 5, 2, 4, 3)

    def test_path(self):
        assert bfs_search(path_graph(3)).visit_order == (0, 1, 2)

    def test_final_queue_is_visit_order(self):
        rng = random.Random(23)
        for _ in range(40):
            g = random_connected_graph(rng.randint(1, 15), 0.3, rng.randint(0, 9999))
            trace = bfs_search(g)
            stages = list(trace.stages())
            assert stages[-1].queue == trace.visit_order[: trace.queue_lengths[-1]]
            assert trace.queue_lengths[-1] == g.vertex_count
            # queues end-extend and the processed set is always a prefix
            for alpha, stage in enumerate(stages):
                assert stage.prefix_len == alpha
                assert stage.q == trace.visit_order[alpha]
                assert len(stage.queue) >= alpha + 1

    def test_stage_lines(self, six_cycle_tail):
        lines = bfs_search(six_cycle_tail).stage_lines()
        assert lines[0] == "stage 0: B=0 Q=(0) q=0"
        assert lines[1] == "stage 1: B=1 Q=(0 1 5) q=1"

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            bfs_search(OrderedGraph(2))


class TestAltSearch:
    def test_six_cycle_tail_splits(self, six_cycle_tail):
        # greatest vertex 5 splits off {5, 3}; recursing gives the
        # concatenation (0,1,2,4) then (5,3)
        assert alt_search(six_cycle_tail) == (0, 1, 2, 4, 5, 3)

    def test_path(self):
        assert alt_search(path_graph(3)) == (0, 1, 2)

    def test_triangle(self):
        g = cycle_graph(3)
        assert alt_search(g) == deterministic_search(g).visit_order

    def test_agrees_with_search_on_random_graphs(self):
        rng = random.Random(27)
        for _ in range(80):
            g = random_connected_graph(rng.randint(1, 12), 0.35, rng.randint(0, 9999))
            start = rng.randrange(g.vertex_count)
            assert alt_search(g, start) == deterministic_search(g, start).visit_order

    def test_long_path_needs_no_recursion(self):
        # the split chain has depth ~n here, far past the interpreter's
        # default recursion limit
        n = 3000
        g = path_graph(n)
        assert alt_search(g) == tuple(range(n))

    def test_counts(self, six_cycle_tail):
        order, counts = alt_search_with_counts(six_cycle_tail)
        assert order == (0, 1, 2, 4, 5, 3)
        assert counts["splits"] == 5
        assert counts["scanned"] > 0

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            alt_search(OrderedGraph(3, ((0, 1),)))


class TestLeastNeighborMap:
    def test_six_cycle_tail_search_order(self, six_cycle_tail):
        m = least_neighbor_map(six_cycle_tail, (0, 1, 2, 4, 5, 3))
        assert m.root == 0
        assert m.parent == {1: 0, 2: 1, 4: 2, 5: 0, 3: 5}

    def test_six_cycle_tail_bfs_order(self, six_cycle_tail):
        m = least_neighbor_map(six_cycle_tail, (0, 1, 5, 2, 3, 4))
        assert m.parent == {1: 0, 2: 1, 4: 5, 5: 0, 3: 5}

    def test_path_identity(self):
        m = least_neighbor_map(path_graph(4), (0, 1, 2, 3))
        assert m.parent == {i: i - 1 for i in range(1, 4)}

    def test_triangle_identity(self):
        m = least_neighbor_map(cycle_graph(3), (0, 1, 2))
        assert m.parent == {1: 0, 2: 0}

    def test_rejects_isolated_non_first(self):
        g = OrderedGraph(2)
        with pytest.raises(ValueError):
            least_neighbor_map(g, (0, 1))

    def test_minimizes_position_not_vertex_number(self):
        rng = random.Random(29)
        for _ in range(30):
            g = random_connected_graph(rng.randint(2, 10), 0.5, rng.randint(0, 9999))
            order = list(range(g.vertex_count))
            rng.shuffle(order)
            positions = invert_permutation(order)
            m = least_neighbor_map(g, tuple(order))
            for v, p in m.parent.items():
                assert p in g.adjacency[v]
                assert all(positions[p] <= positions[u] for u in g.adjacency[v])


class TestTraversalTree:
    def test_six_cycle_tail(self, six_cycle_tail):
        tree = traversal_tree(six_cycle_tail, (0, 1, 2, 4, 5, 3))
        assert tree.edges == ((0, 1), (0, 5), (1, 2), (2, 4), (3, 5))

    def test_path_is_its_own_tree(self):
        g = path_graph(4)
        assert traversal_tree(g, (0, 1, 2, 3)) == g

    def test_triangle_becomes_star(self):
        assert traversal_tree(cycle_graph(3), (0, 1, 2)) == star_graph(3)

    def test_rejects_non_traversal(self):
        with pytest.raises(ValueError):
            traversal_tree(path_graph(3), (0, 2, 1))

    def test_tree_shape_properties(self):
        rng = random.Random(31)
        for _ in range(40):
            g = random_connected_graph(rng.randint(1, 14), 0.4, rng.randint(0, 9999))
            tau = deterministic_search(g).visit_order
            tree = traversal_tree(g, tau)
            assert len(tree.edges) == g.vertex_count - 1
            assert set(tree.edges) <= set(g.edges)
            assert is_traversal(tree, tau)


class TestFixedPointLaws:
    def test_search_fixes_traversals(self):
        rng = random.Random(33)
        checked = 0
        for _ in range(120):
            g = random_connected_graph(rng.randint(1, 12), 0.5, rng.randint(0, 9999))
            identity = tuple(range(g.vertex_count))
            if is_traversal(g, identity):
                assert deterministic_search(g).visit_order == identity
                checked += 1
        assert checked > 20

    def test_idempotent(self):
        rng = random.Random(35)
        for _ in range(60):
            g = random_connected_graph(rng.randint(1, 14), 0.35, rng.randint(0, 9999))
            tau = deterministic_search(g).visit_order
            assert deterministic_search(relabel(g, tau)).visit_order == tuple(
                range(g.vertex_count)
            )

    def test_bfs_fixed_by_search(self):
        rng = random.Random(37)
        for _ in range(60):
            g = random_connected_graph(rng.randint(1, 14), 0.35, rng.randint(0, 9999))
            beta = bfs_search(g).visit_order
            assert deterministic_search(relabel(g, beta)).visit_order == tuple(
                range(g.vertex_count)
            )

    def test_search_tree_retraversal(self):
        rng = random.Random(39)
        for _ in range(60):
            g = random_connected_graph(rng.randint(1, 14), 0.4, rng.randint(0, 9999))
            tau = deterministic_search(g).visit_order
            assert deterministic_search(traversal_tree(g, tau)).visit_order == tau

    def test_bfs_tree_retraversal(self):
        rng = random.Random(41)
        for _ in range(60):
            g = random_connected_graph(rng.randint(1, 14), 0.4, rng.randint(0, 9999))
            beta = bfs_search(g).visit_order
            assert bfs_search(traversal_tree(g, beta)).visit_order == beta

    def test_bfs_after_search_differs_on_witness(self, six_cycle_tail):
        beta = bfs_search(six_cycle_tail).visit_order
        tau = deterministic_search(six_cycle_tail).visit_order
        after = tuple(tau[v] for v in bfs_search(relabel(six_cycle_tail, tau)).visit_order)
        assert beta == (0, 1, 5, 2, 3, 4)
        assert after == (0, 1, 5, 2, 4, 3)
        assert beta != after

    def test_visit_orders_are_decreasing_traversals(self):
        rng = random.Random(43)
        for _ in range(40):
            g = random_connected_graph(rng.randint(1, 14), 0.35, rng.randint(0, 9999))
            for order in (
                deterministic_search(g).visit_order,
                bfs_search(g).visit_order,
            ):
                assert is_traversal(g, order)
                positions = invert_permutation(order)
                parents = least_neighbor_map(g, order).parent
                assert all(positions[p] < positions[v] for v, p in parents.items())

    def test_complete_graph_identity(self):
        g = complete_graph(5)
        assert deterministic_search(g).visit_order == (0, 1, 2, 3, 4)
        assert bfs_search(g).visit_order == (0, 1, 2, 3, 4)
