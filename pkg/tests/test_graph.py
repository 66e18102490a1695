import random

import pytest

from conftest import complete_graph, cycle_graph, path_graph
from ordsearch.graph import (
    GraphFormatError,
    OrderedGraph,
    component_excluding,
    deserialize,
    dot_export,
    induced_subgraph,
    invert_permutation,
    is_connected,
    neighbors,
    random_connected_graph,
    relabel,
    serialize,
)


class TestConstruction:
    def test_normalizes_edges(self):
        g = OrderedGraph(3, ((2, 1), (1, 2), (0, 1)))
        assert g.edges == ((0, 1), (1, 2))

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            OrderedGraph(2, ((1, 1),))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            OrderedGraph(2, ((0, 2),))

    def test_adjacency_sorted(self, six_cycle_tail):
        assert six_cycle_tail.adjacency[5] == (0, 3, 4)


class TestConnectivity:
    def test_path(self):
        assert is_connected(path_graph(3))

    def test_isolated_pair(self):
        assert not is_connected(OrderedGraph(2))

    def test_six_cycle_tail(self, six_cycle_tail):
        assert is_connected(six_cycle_tail)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            is_connected(OrderedGraph(0))


class TestNeighbors:
    def test_six_cycle_tail(self, six_cycle_tail):
        assert neighbors(six_cycle_tail, 5) == (0, 3, 4)

    def test_path_middle(self):
        assert neighbors(path_graph(3), 1) == (0, 2)

    def test_isolated(self):
        assert neighbors(OrderedGraph(1), 0) == ()

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            neighbors(path_graph(2), 5)


class TestInducedSubgraph:
    def test_drops_vertices_and_edges(self, six_cycle_tail):
        sub, kept = induced_subgraph(six_cycle_tail, {0, 1, 2, 4})
        assert kept == (0, 1, 2, 4)
        assert sub == path_graph(4)

    def test_identity_on_full_set(self, six_cycle_tail):
        sub, kept = induced_subgraph(six_cycle_tail, range(6))
        assert sub == six_cycle_tail
        assert kept == (0, 1, 2, 3, 4, 5)

    def test_singleton(self, six_cycle_tail):
        sub, kept = induced_subgraph(six_cycle_tail, {3})
        assert sub == OrderedGraph(1)
        assert kept == (3,)

    def test_rejects_empty_set(self, six_cycle_tail):
        with pytest.raises(ValueError):
            induced_subgraph(six_cycle_tail, ())

    def test_preserves_adjacency(self):
        rng = random.Random(3)
        for _ in range(30):
            g = random_connected_graph(rng.randint(2, 12), 0.4, rng.randint(0, 999))
            w = sorted(rng.sample(range(g.vertex_count), rng.randint(1, g.vertex_count)))
            sub, kept = induced_subgraph(g, w)
            for i in range(len(kept)):
                for j in range(i + 1, len(kept)):
                    assert sub.has_edge(i, j) == g.has_edge(kept[i], kept[j])


class TestComponentExcluding:
    def test_six_cycle_tail(self, six_cycle_tail):
        assert component_excluding(six_cycle_tail, 0, 5) == {0, 1, 2, 4}

    def test_path_split(self):
        assert component_excluding(path_graph(3), 0, 1) == {0}

    def test_triangle(self):
        assert component_excluding(cycle_graph(3), 0, 2) == {0, 1}

    def test_rejects_equal_vertices(self):
        with pytest.raises(ValueError):
            component_excluding(path_graph(3), 1, 1)

    def test_partitions_remainder(self):
        rng = random.Random(5)
        for _ in range(30):
            g = random_connected_graph(rng.randint(2, 12), 0.3, rng.randint(0, 999))
            removed = rng.randrange(g.vertex_count)
            rest = [v for v in range(g.vertex_count) if v != removed]
            parts = []
            while rest:
                comp = component_excluding(g, rest[0], removed)
                parts.append(comp)
                rest = [v for v in rest if v not in comp]
            union = set().union(*parts)
            assert union == set(range(g.vertex_count)) - {removed}
            assert sum(len(p) for p in parts) == len(union)


class TestRelabel:
    def test_identity(self, six_cycle_tail):
        assert relabel(six_cycle_tail, (0, 1, 2, 3, 4, 5)) == six_cycle_tail

    def test_moves_edge(self, six_cycle_tail):
        h = relabel(six_cycle_tail, (0, 1, 2, 4, 5, 3))
        assert (4, 5) in h.edges  # the old edge 3-5
        assert h == OrderedGraph(6, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (4, 5)))

    def test_round_trip(self):
        rng = random.Random(7)
        for _ in range(20):
            g = random_connected_graph(rng.randint(1, 10), 0.5, rng.randint(0, 999))
            order = list(range(g.vertex_count))
            rng.shuffle(order)
            inverse = invert_permutation(order)
            assert relabel(relabel(g, order), inverse) == g

    def test_preserves_degrees_and_connectivity(self):
        rng = random.Random(9)
        for _ in range(20):
            g = random_connected_graph(rng.randint(2, 12), 0.4, rng.randint(0, 999))
            order = list(range(g.vertex_count))
            rng.shuffle(order)
            h = relabel(g, order)
            assert sorted(h.degree(v) for v in range(h.vertex_count)) == sorted(
                g.degree(v) for v in range(g.vertex_count)
            )
            assert is_connected(h) == is_connected(g)

    def test_rejects_non_permutation(self, six_cycle_tail):
        with pytest.raises(ValueError):
            relabel(six_cycle_tail, (0, 0, 1, 2, 3, 4))


class TestRandomConnectedGraph:
    def test_single_vertex(self):
        assert random_connected_graph(1, 0.5, 0) == OrderedGraph(1)

    def test_full_density(self):
        assert random_connected_graph(5, 1.0, 3) == complete_graph(5)

    def test_deterministic(self):
        a = random_connected_graph(14, 0.3, 42)
        b = random_connected_graph(14, 0.3, 42)
        assert a == b

    def test_always_connected(self):
        rng = random.Random(11)
        for _ in range(50):
            g = random_connected_graph(
                rng.randint(1, 25), rng.choice([0.05, 0.2, 0.6, 1.0]), rng.randint(0, 10_000)
            )
            assert is_connected(g)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            random_connected_graph(0, 0.5, 0)


class TestSerialization:
    def test_parse_path(self):
        g = deserialize("n 3\ne 0 1\ne 1 2\n")
        assert g == path_graph(3)

    def test_comments_and_blanks(self):
        g = deserialize("# a path\n\nn 2\n e 0 1 \n")
        assert g == path_graph(2)

    def test_round_trip(self):
        rng = random.Random(13)
        for _ in range(25):
            g = random_connected_graph(rng.randint(1, 15), 0.4, rng.randint(0, 999))
            assert deserialize(serialize(g)) == g

    def test_serialize_sorted(self, six_cycle_tail):
        assert serialize(six_cycle_tail) == "n 6\ne 0 1\ne 0 5\ne 1 2\ne 2 4\ne 3 5\ne 4 5\n"

    @pytest.mark.parametrize(
        "text, lineno",
        [
            ("n 2\ne 0 2\n", 2),
            ("n 2\ne 0 1\ne 1 0\n", 3),
            ("n 2\ne 1 1\n", 2),
            ("e 0 1\n", 1),
            ("n 2\nx 0 1\n", 2),
            ("n 2\ne 0\n", 2),
            ("n 2\nn 3\n", 2),
        ],
    )
    def test_errors_carry_line_numbers(self, text, lineno):
        with pytest.raises(GraphFormatError) as exc:
            deserialize(text)
        assert exc.value.line == lineno

    def test_missing_count(self):
        with pytest.raises(GraphFormatError):
            deserialize("# nothing\n")


class TestDotExport:
    def test_single_vertex(self):
        assert dot_export(OrderedGraph(1)) == "graph ordered {\n  0;\n}\n"

    def test_traversal_positions(self):
        text = dot_export(path_graph(2), traversal=(1, 0))
        assert '0 [label="0 (pos 1)"]' in text
        assert '1 [label="1 (pos 0)"]' in text
        assert "0 -- 1;" in text

    def test_rejects_bad_traversal(self):
        with pytest.raises(ValueError):
            dot_export(path_graph(2), traversal=(0, 0))
