"""Order predicates, traversal enumeration, and extremality/stability verifiers.

A vertex order is a traversal when every initial segment induces a connected
subgraph; ``is_traversal`` checks that directly with incremental union-find
rather than the shortcut "every vertex has an earlier neighbor", which is a
separate predicate whose agreement with the first is itself a tested fact.

Breadth-first and depth-first orders are characterized by the classical
three-vertex conditions.  For breadth-first orders on vertex numbering there
is an equivalent working form: the least-neighbor map is weakly monotone.
The fast form is the default; the literal triple scan is kept alongside so
the equivalence can be checked exhaustively.

``enumerate_traversals`` expands the nondeterministic search tree (grow a
prefix by any vertex adjacent to it), prunes branches that already violate
the requested kind, and filters final candidates through the predicate, so
its output can be compared 1:1 against brute-force permutation filtering.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
import random
from typing import Iterable, Sequence

from .graph import (
    DisconnectedGraphError,
    OrderedGraph,
    Traversal,
    induced_subgraph,
    invert_permutation,
    is_connected,
    is_permutation,
)
from .search import bfs_search, deterministic_search, least_neighbor_map

KINDS = ("all", "breadth_first", "depth_first")


@dataclass(frozen=True)
class TraversalSet:
    """All orders of one graph passing one predicate."""

    kind: str
    orders: frozenset[Traversal]

    def sorted_orders(self) -> list[Traversal]:
        return sorted(self.orders)

    def __len__(self) -> int:
        return len(self.orders)

    def __contains__(self, order) -> bool:
        return tuple(order) in self.orders


def _require_permutation(g: OrderedGraph, order: Sequence[int]) -> None:
    if not is_permutation(order, g.vertex_count):
        raise ValueError("order must be a permutation of the vertices")


def is_traversal(g: OrderedGraph, order: Sequence[int]) -> bool:
    """True iff every prefix of the order induces a connected subgraph."""
    _require_permutation(g, order)
    n = g.vertex_count
    if n == 0:
        raise ValueError("no traversals of the empty graph")
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    placed = bytearray(n)
    placed[order[0]] = 1
    components = 1
    for v in order[1:]:
        placed[v] = 1
        components += 1
        for u in g.adjacency[v]:
            if placed[u]:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    components -= 1
        if components != 1:
            return False
    return True


def has_decreasing_neighbors(g: OrderedGraph, order: Sequence[int]) -> bool:
    """True iff every non-first vertex has a neighbor earlier in the order."""
    _require_permutation(g, order)
    positions = invert_permutation(order)
    for v in order[1:]:
        if not any(positions[u] < positions[v] for u in g.adjacency[v]):
            return False
    return True


def _require_traversal(g: OrderedGraph, order: Sequence[int]) -> None:
    if not is_traversal(g, order):
        raise ValueError("order is not a traversal of the graph")


def is_breadth_first(g: OrderedGraph, order: Sequence[int]) -> bool:
    """Breadth-first test via the least-neighbor map: parents' positions must
    be weakly increasing along the order."""
    _require_traversal(g, order)
    positions = invert_permutation(order)
    parent = least_neighbor_map(g, order).parent
    last = -1
    for v in order[1:]:
        p = positions[parent[v]]
        if p < last:
            return False
        last = p
    return True


def breadth_first_triple_condition(g: OrderedGraph, order: Sequence[int]) -> bool:
    """The literal three-vertex breadth-first condition: whenever u < v < w,
    u and w adjacent but u and v not, some x < u must be adjacent to v."""
    _require_traversal(g, order)
    positions = invert_permutation(order)
    n = g.vertex_count
    for a in range(n):
        u = order[a]
        for b in range(a + 1, n):
            v = order[b]
            if g.has_edge(u, v):
                continue
            if not any(g.has_edge(u, order[c]) for c in range(b + 1, n)):
                continue
            if not any(positions[x] < a for x in g.adjacency[v]):
                return False
    return True


def is_depth_first(g: OrderedGraph, order: Sequence[int]) -> bool:
    """Depth-first test: whenever u < v < w, u and w adjacent but u and v
    not, some x strictly between u and v must be adjacent to v."""
    _require_traversal(g, order)
    positions = invert_permutation(order)
    n = g.vertex_count
    last_nb = [max((positions[x] for x in g.adjacency[v]), default=-1) for v in order]
    nb_positions = [sorted(positions[x] for x in g.adjacency[v]) for v in order]
    for a in range(n):
        u = order[a]
        if last_nb[a] <= a:
            continue
        for b in range(a + 1, n):
            v = order[b]
            if g.has_edge(u, v):
                continue
            if last_nb[a] <= b:
                continue
            ps = nb_positions[b]
            i = bisect_right(ps, a)
            if i >= len(ps) or ps[i] >= b:
                return False
    return True


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """-1, 0 or 1 by the first disagreeing position."""
    if len(a) != len(b):
        raise ValueError("orders must have the same length")
    ta, tb = tuple(a), tuple(b)
    if ta < tb:
        return -1
    if ta > tb:
        return 1
    return 0


def colex_inverse_key(order: Sequence[int]) -> tuple[int, ...]:
    """Positions of the greatest vertex down to the least; comparing these
    keys compares inverse permutations colexicographically."""
    positions = invert_permutation(order)
    return tuple(reversed(positions))


def colex_compare_inverse(a: Sequence[int], b: Sequence[int]) -> int:
    """Compare inverse permutations on the last coordinate first."""
    if len(a) != len(b):
        raise ValueError("orders must have the same length")
    ka, kb = colex_inverse_key(a), colex_inverse_key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def _predicates_for(kind: str):
    if kind == "all":
        return is_traversal
    if kind == "breadth_first":
        return is_breadth_first
    if kind == "depth_first":
        return is_depth_first
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def enumerate_traversals(
    g: OrderedGraph, kind: str = "all", fixed_start: int | None = None
) -> TraversalSet:
    """All vertex orders of the given kind, by search-tree expansion.

    Prefixes grow by vertices adjacent to them, branches that already violate
    the kind are cut, and completed orders pass through the predicate once
    more."""
    predicate = _predicates_for(kind)
    if g.vertex_count == 0:
        raise ValueError("no traversals of the empty graph")
    if not is_connected(g):
        comp = _component_of(g, 0)
        raise DisconnectedGraphError(min(set(range(g.vertex_count)) - comp), 0)
    if fixed_start is not None and not 0 <= fixed_start < g.vertex_count:
        raise ValueError(f"start vertex {fixed_start} out of range")
    starts = [fixed_start] if fixed_start is not None else list(range(g.vertex_count))
    n = g.vertex_count
    found = set()
    for s in starts:
        stack: list[tuple[int, ...]] = [(s,)]
        while stack:
            prefix = stack.pop()
            if len(prefix) == n:
                if predicate(g, prefix):
                    found.add(prefix)
                continue
            used = set(prefix)
            frontier = sorted(
                {w for v in prefix for w in g.adjacency[v]} - used
            )
            for w in frontier:
                extended = prefix + (w,)
                if kind == "breadth_first" and not _bf_prefix_ok(g, extended):
                    continue
                if kind == "depth_first" and not _df_prefix_ok(g, extended):
                    continue
                stack.append(extended)
    return TraversalSet(kind, frozenset(found))


def _component_of(g: OrderedGraph, v: int) -> set[int]:
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _bf_prefix_ok(g: OrderedGraph, prefix: tuple[int, ...]) -> bool:
    # Parents of placed vertices are final, so a monotonicity violation
    # inside the prefix can never be repaired by any extension.
    pos = {v: i for i, v in enumerate(prefix)}
    last = -1
    for v in prefix[1:]:
        p = min(pos[u] for u in g.adjacency[v] if u in pos)
        if p < last:
            return False
        last = p
    return True


def _df_prefix_ok(g: OrderedGraph, prefix: tuple[int, ...]) -> bool:
    # Check pairs (u, v) with v the vertex just placed: if u and v are not
    # adjacent, no placed vertex between them is adjacent to v, and u still
    # has an unplaced neighbor, then that neighbor will land after v and
    # witness a violation in every completion.
    v = prefix[-1]
    b = len(prefix) - 1
    pos = {u: i for i, u in enumerate(prefix)}
    v_nb_positions = sorted(pos[u] for u in g.adjacency[v] if u in pos)
    for a in range(b - 1, -1, -1):
        u = prefix[a]
        if g.has_edge(u, v):
            continue
        if any(a < p < b for p in v_nb_positions):
            continue
        if any(w not in pos for w in g.adjacency[u]):
            return False
    return True


def verify_lex_min(g: OrderedGraph) -> bool:
    """Search output must be lexicographically least among all traversals
    from vertex 0, and the breadth-first output least among breadth-first
    traversals from vertex 0."""
    tau = deterministic_search(g, 0).visit_order
    all_from_zero = enumerate_traversals(g, "all", fixed_start=0)
    if tau not in all_from_zero or tau != min(all_from_zero.orders):
        return False
    beta = bfs_search(g, 0).visit_order
    bf_from_zero = enumerate_traversals(g, "breadth_first", fixed_start=0)
    return beta in bf_from_zero and beta == min(bf_from_zero.orders)


def verify_colex_max(g: OrderedGraph) -> bool:
    """Search output's inverse must be colexicographically greatest among
    inverses of traversals from vertex 0."""
    tau = deterministic_search(g, 0).visit_order
    candidates = enumerate_traversals(g, "all", fixed_start=0)
    best = max(candidates.orders, key=colex_inverse_key)
    return tau == best


def closure_samples(g: OrderedGraph, seed: int, count: int) -> list[frozenset[int]]:
    """Vertex sets closed under the search traversal's least-neighbor map,
    obtained by closing random seed sets.  At most ``count`` distinct sets
    are returned (small graphs may admit fewer)."""
    if not is_connected(g):
        raise DisconnectedGraphError(min(set(range(g.vertex_count)) - _component_of(g, 0)), 0)
    tau = deterministic_search(g, 0).visit_order
    parent = least_neighbor_map(g, tau).parent
    rng = random.Random(seed)
    out: list[frozenset[int]] = []
    seen = set()
    for _ in range(20 * count):
        if len(out) == count:
            break
        size = rng.randint(1, min(3, g.vertex_count))
        pending = set(rng.sample(range(g.vertex_count), size))
        closed: set[int] = set()
        while pending:
            v = pending.pop()
            closed.add(v)
            p = parent.get(v)
            if p is not None and p not in closed:
                pending.add(p)
        key = frozenset(closed)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


def verify_subset_stability(g: OrderedGraph, w: Iterable[int]) -> bool:
    """Searching the subgraph induced by a parent-closed set from its first
    element must list the set in the same relative order as searching the
    whole graph."""
    w = set(w)
    if not w:
        raise ValueError("vertex set must be nonempty")
    tau = deterministic_search(g, 0).visit_order
    positions = invert_permutation(tau)
    parent = least_neighbor_map(g, tau).parent
    w_sorted = sorted(w, key=positions.__getitem__)
    w0 = w_sorted[0]
    for v in w:
        if v != w0 and parent[v] not in w:
            raise ValueError(f"set is not closed under the least-neighbor map at vertex {v}")
    sub, kept = induced_subgraph(g, w)
    sub_order = deterministic_search(sub, kept.index(w0)).visit_order
    return [kept[i] for i in sub_order] == w_sorted


def verify_quotient_stability(g: OrderedGraph, parts: Sequence[Iterable[int]]) -> bool:
    """Collapsing an interval partition (each part connected and parent-closed
    except at its first element) and searching the quotient must order the
    parts as the original search ordered their first elements."""
    part_sets = [set(p) for p in parts]
    flat = [v for p in part_sets for v in p]
    if sorted(flat) != list(range(g.vertex_count)):
        raise ValueError("parts do not partition the vertex set")
    tau = deterministic_search(g, 0).visit_order
    positions = invert_permutation(tau)
    parent = least_neighbor_map(g, tau).parent
    anchors = []
    for i, part in enumerate(part_sets):
        by_pos = sorted(positions[v] for v in part)
        if by_pos[-1] - by_pos[0] + 1 != len(part):
            raise ValueError(f"part {i} is not an interval of the traversal")
        anchor = tau[by_pos[0]]
        anchors.append(anchor)
        sub, _ = induced_subgraph(g, part)
        if not is_connected(sub):
            raise ValueError(f"part {i} does not induce a connected subgraph")
        for v in part:
            if v != anchor and parent[v] not in part:
                raise ValueError(
                    f"part {i} is not closed under the least-neighbor map at vertex {v}"
                )
    # Quotient input order: parts sorted by their anchors' vertex numbers.
    order_of_parts = sorted(range(len(part_sets)), key=lambda i: anchors[i])
    quotient_edges = set()
    vertex_part = {}
    for qi, pi in enumerate(order_of_parts):
        for v in part_sets[pi]:
            vertex_part[v] = qi
    for u, v in g.edges:
        qu, qv = vertex_part[u], vertex_part[v]
        if qu != qv:
            quotient_edges.add((min(qu, qv), max(qu, qv)))
    quotient = OrderedGraph(len(part_sets), tuple(quotient_edges))
    quotient_order = deterministic_search(quotient, 0).visit_order
    searched = [anchors[order_of_parts[qi]] for qi in quotient_order]
    expected = sorted(anchors, key=positions.__getitem__)
    return searched == expected


@dataclass(frozen=True)
class LevelVerdict:
    """Results of the three level-structure checks; the interval and parent
    checks are None when the graph has a cycle."""

    acyclic: bool
    levels_are_intervals: bool | None
    levels_in_order: bool | None
    parents_one_level_up: bool | None

    def all_pass(self) -> bool:
        return self.acyclic and bool(
            self.levels_are_intervals and self.levels_in_order and self.parents_one_level_up
        )


def level_decomposition(
    g: OrderedGraph, order: Sequence[int], root: int
) -> tuple[tuple[frozenset[int], ...], LevelVerdict]:
    """Distance levels from the root, with structure checks for acyclic
    graphs: each level is an interval of the order, levels appear in
    increasing distance order, and the least-neighbor map drops every vertex
    exactly one level."""
    _require_permutation(g, order)
    if order[0] != root:
        raise ValueError("order does not start at the root")
    if not is_breadth_first(g, order):
        raise ValueError("order is not a breadth-first traversal")
    dist = {root: 0}
    frontier = [root]
    levels = [frozenset([root])]
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.adjacency[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        if nxt:
            levels.append(frozenset(nxt))
        frontier = nxt
    acyclic = len(g.edges) == g.vertex_count - 1
    if not acyclic:
        return tuple(levels), LevelVerdict(False, None, None, None)
    positions = invert_permutation(order)
    intervals = True
    in_order = True
    bounds = []
    for level in levels:
        ps = sorted(positions[v] for v in level)
        if ps[-1] - ps[0] + 1 != len(level):
            intervals = False
        bounds.append((ps[0], ps[-1]))
    for (lo1, hi1), (lo2, hi2) in zip(bounds, bounds[1:]):
        if hi1 >= lo2:
            in_order = False
    parent = least_neighbor_map(g, order).parent
    parents_up = all(
        parent[v] in levels[i - 1] for i in range(1, len(levels)) for v in levels[i]
    )
    return tuple(levels), LevelVerdict(True, intervals, in_order, parents_up)
