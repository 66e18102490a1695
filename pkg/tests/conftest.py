import pytest

from ordsearch.graph import OrderedGraph


def path_graph(n: int) -> OrderedGraph:
    return OrderedGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> OrderedGraph:
    return OrderedGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> OrderedGraph:
    return OrderedGraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(n: int) -> OrderedGraph:
    """Center 0 with n - 1 leaves."""
    return OrderedGraph(n, tuple((0, i) for i in range(1, n)))


@pytest.fixture
def six_cycle_tail() -> OrderedGraph:
    """The 6-vertex graph used throughout: the 5-cycle 0-1-2-4-5-0 with the
    extra vertex 3 hanging off 5."""
    return OrderedGraph(6, ((0, 1), (1, 2), (2, 4), (4, 5), (5, 0), (3, 5)))
