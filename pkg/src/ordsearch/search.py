"""The three search algorithms and the traversal trees they induce.

``deterministic_search`` grows a visited set one vertex at a time, always
taking the numerically least vertex adjacent to the visited set, and records
the full candidate frontier at every stage.  ``bfs_search`` is the queue
variant: when a vertex is processed its unseen neighbors are appended to the
queue in ascending order, and the queue itself, once complete, is the visit
order.  ``alt_search`` computes the same order as ``deterministic_search`` by
a divide and conquer scheme: remove the greatest remaining vertex, traverse
the start's component, then traverse the rest from that removed vertex.  The
agreement of the two is a checked property, not an assumption.

A traversal's least-neighbor map sends every vertex except the first to its
earliest neighbor in the order; symmetrizing it yields a spanning tree, and
re-running the matching search on that tree reproduces the traversal.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .graph import (
    DisconnectedGraphError,
    OrderedGraph,
    Traversal,
    invert_permutation,
    is_permutation,
)


@dataclass(frozen=True)
class ChoiceStage:
    """One stage of deterministic search: the frontier and the pick."""

    chosen: int
    frontier: tuple[int, ...]


@dataclass(frozen=True)
class SearchTrace:
    """Deterministic search run: visit order plus per-stage frontier records.

    stages[i].chosen == visit_order[i]; the stage-0 frontier is the start
    vertex alone.
    """

    visit_order: Traversal
    stages: tuple[ChoiceStage, ...]

    def stage_lines(self) -> list[str]:
        return [
            f"stage {i}: pick {s.chosen} from {{{' '.join(map(str, s.frontier))}}}"
            for i, s in enumerate(self.stages)
        ]


@dataclass(frozen=True)
class BfsStage:
    """One stage of breadth-first search: processed-prefix length, the queue
    so far, and the vertex being processed."""

    prefix_len: int
    queue: tuple[int, ...]
    q: int


@dataclass(frozen=True)
class BfsTrace:
    """Breadth-first run.  The queue only ever grows at the end, so each
    stage's queue is a prefix of the final one; storing the visit order (the
    final queue) plus the queue length at each stage captures every stage.
    """

    visit_order: Traversal
    queue_lengths: tuple[int, ...]

    def stages(self) -> Iterator[BfsStage]:
        for alpha, qlen in enumerate(self.queue_lengths):
            yield BfsStage(alpha, self.visit_order[:qlen], self.visit_order[alpha])

    def stage_lines(self) -> list[str]:
        return [
            f"stage {s.prefix_len}: B={s.prefix_len} Q=({' '.join(map(str, s.queue))}) q={s.q}"
            for s in self.stages()
        ]


def _check_start(g: OrderedGraph, start: int) -> None:
    if g.vertex_count == 0:
        raise ValueError("cannot search the empty graph")
    if not 0 <= start < g.vertex_count:
        raise ValueError(f"start vertex {start} out of range")


def _first_unreached(g: OrderedGraph, reached: Sequence[int]) -> int:
    for v in range(g.vertex_count):
        if not reached[v]:
            return v
    raise AssertionError("no unreached vertex")


def deterministic_search(g: OrderedGraph, start: int = 0) -> SearchTrace:
    """Visit all vertices, at each stage taking the least vertex adjacent to
    the visited set.  Raises DisconnectedGraphError if some vertex is never
    reached."""
    _check_start(g, start)
    n = g.vertex_count
    visited = bytearray(n)
    in_frontier = bytearray(n)
    frontier: list[int] = []  # heap; every entry is a current frontier vertex
    order = [start]
    stages = [ChoiceStage(start, (start,))]
    visited[start] = 1
    for w in g.adjacency[start]:
        in_frontier[w] = 1
        heapq.heappush(frontier, w)
    while frontier:
        snapshot = tuple(sorted(frontier))
        v = heapq.heappop(frontier)
        in_frontier[v] = 0
        visited[v] = 1
        order.append(v)
        stages.append(ChoiceStage(v, snapshot))
        for w in g.adjacency[v]:
            if not visited[w] and not in_frontier[w]:
                in_frontier[w] = 1
                heapq.heappush(frontier, w)
    if len(order) != n:
        raise DisconnectedGraphError(_first_unreached(g, visited), start)
    return SearchTrace(tuple(order), tuple(stages))


def bfs_search(g: OrderedGraph, start: int = 0) -> BfsTrace:
    """Queue-based breadth-first search; newly discovered neighbors are
    enqueued in ascending input order."""
    _check_start(g, start)
    n = g.vertex_count
    queue = [start]
    enqueued = bytearray(n)
    enqueued[start] = 1
    qlens = []
    alpha = 0
    while alpha < len(queue):
        qlens.append(len(queue))
        q = queue[alpha]
        for w in g.adjacency[q]:
            if not enqueued[w]:
                enqueued[w] = 1
                queue.append(w)
        alpha += 1
    if len(queue) != n:
        raise DisconnectedGraphError(_first_unreached(g, enqueued), start)
    return BfsTrace(tuple(queue), tuple(qlens))


def alt_search(g: OrderedGraph, start: int = 0) -> Traversal:
    """Divide and conquer traversal: split off the greatest remaining vertex,
    finish the start's side, then continue from the removed vertex."""
    order, _ = alt_search_with_counts(g, start)
    return order


def alt_search_with_counts(g: OrderedGraph, start: int = 0) -> tuple[Traversal, dict[str, int]]:
    """As alt_search, also returning crude work counters: ``splits`` is the
    number of two-way splits performed and ``scanned`` the total number of
    vertices touched by component scans."""
    _check_start(g, start)
    if g.vertex_count > 1 and not _reaches_all(g, start):
        raise DisconnectedGraphError(_first_unreached_from(g, start), start)
    counts = {"splits": 0, "scanned": 0}
    order: list[int] = []
    # Explicit work stack; the split chain can be as long as the vertex count.
    stack: list[tuple[frozenset[int], int]] = [(frozenset(range(g.vertex_count)), start)]
    while stack:
        members, v = stack.pop()
        if len(members) == 1:
            order.append(v)
            continue
        w = max(members - {v})
        x_side = _component_within(g, members - {w}, v)
        counts["splits"] += 1
        counts["scanned"] += len(members)
        y_side = members - x_side
        stack.append((y_side, w))
        stack.append((x_side, v))
    return tuple(order), counts


def _component_within(g: OrderedGraph, allowed: frozenset[int], v: int) -> frozenset[int]:
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for x in g.adjacency[u]:
            if x in allowed and x not in seen:
                seen.add(x)
                stack.append(x)
    return frozenset(seen)


def _reaches_all(g: OrderedGraph, start: int) -> bool:
    return len(_component_within(g, frozenset(range(g.vertex_count)), start)) == g.vertex_count


def _first_unreached_from(g: OrderedGraph, start: int) -> int:
    comp = _component_within(g, frozenset(range(g.vertex_count)), start)
    for v in range(g.vertex_count):
        if v not in comp:
            return v
    raise AssertionError("no unreached vertex")


@dataclass(frozen=True)
class LeastNeighborMap:
    """For a vertex order: every vertex except the order's first element maps
    to its neighbor that comes earliest in the order."""

    root: int
    parent: Mapping[int, int]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """The symmetrized parent edges, normalized and sorted."""
        return tuple(sorted({(min(v, p), max(v, p)) for v, p in self.parent.items()}))


def least_neighbor_map(g: OrderedGraph, order: Sequence[int]) -> LeastNeighborMap:
    """Map each non-first vertex of the order to its order-least neighbor.

    Every vertex other than the order's first element must have at least one
    neighbor.
    """
    if not is_permutation(order, g.vertex_count):
        raise ValueError("order must be a permutation of the vertices")
    positions = invert_permutation(order)
    parent = {}
    for v in range(g.vertex_count):
        if v == order[0]:
            continue
        ns = g.adjacency[v]
        if not ns:
            raise ValueError(f"vertex {v} is isolated and not first in the order")
        parent[v] = min(ns, key=positions.__getitem__)
    return LeastNeighborMap(order[0], parent)


def traversal_tree(g: OrderedGraph, order: Sequence[int]) -> OrderedGraph:
    """Spanning tree obtained by symmetrizing the least-neighbor map of a
    traversal of g."""
    from .predicates import is_traversal

    if not is_traversal(g, order):
        raise ValueError("order is not a traversal of the graph")
    return OrderedGraph(g.vertex_count, least_neighbor_map(g, order).edges())
