"""The acceptance suite: nine self-contained checks covering the golden
examples, the ordinal bound function, exhaustive extremality at small sizes,
algorithm equivalence, the fixed-point laws, stability, the witness builds,
breadth-first level structure, and predicate equivalences.

Each criterion is a function that raises AssertionError on failure; the
brute-force sides of the checks (permutation filters, bitmask graph
enumeration, independent decompositions) are local to this module so they
share no code path with the library routines they judge.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .graph import OrderedGraph, random_connected_graph, relabel
from .ordinal import ONE, OMEGA, Ordinal, cofinality, fundamental_sequence, omega_power, omega_quot_rem, zeta
from .predicates import (
    breadth_first_triple_condition,
    closure_samples,
    has_decreasing_neighbors,
    is_breadth_first,
    is_traversal,
    level_decomposition,
    verify_quotient_stability,
    verify_subset_stability,
)
from .search import alt_search, bfs_search, deterministic_search, traversal_tree
from .witness import build_bfs_tree_witness, build_zeta_witness, verify_witness

SIX_CYCLE_TAIL = OrderedGraph(6, ((0, 1), (1, 2), (2, 4), (4, 5), (5, 0), (3, 5)))

CONNECTED_GRAPH_COUNTS = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26_704}


# -- small-graph machinery (oracle side) ------------------------------------


def iter_connected_adjacency(n: int) -> Iterator[list[int]]:
    """All labeled connected graphs on n vertices as adjacency bitmasks."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        adj = [0] * n
        b = bits
        i = 0
        while b:
            if b & 1:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            b >>= 1
            i += 1
        reached = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            v = 0
            while f:
                if f & 1:
                    nxt |= adj[v]
                f >>= 1
                v += 1
            frontier = nxt & ~reached
            reached |= frontier
        if reached == (1 << n) - 1:
            yield adj


def graph_from_adjacency(adj: list[int]) -> OrderedGraph:
    n = len(adj)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1
    ]
    return OrderedGraph(n, tuple(edges))


def _prefix_connected_throughout(adj: list[int], order: tuple[int, ...]) -> bool:
    """Union-find connectivity of every prefix; no earlier-neighbor shortcut."""
    n = len(order)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    placed = 0
    placed |= 1 << order[0]
    components = 1
    for v in order[1:]:
        placed |= 1 << v
        components += 1
        nbs = adj[v] & placed
        u = 0
        while nbs:
            if nbs & 1:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    components -= 1
            nbs >>= 1
            u += 1
        if components != 1:
            return False
    return True


def _monotone_parents(adj: list[int], order: tuple[int, ...]) -> bool:
    positions = [0] * len(order)
    for i, v in enumerate(order):
        positions[v] = i
    last = -1
    for v in order[1:]:
        nbs = adj[v]
        best = len(order)
        u = 0
        while nbs:
            if nbs & 1 and positions[u] < best:
                best = positions[u]
            nbs >>= 1
            u += 1
        if best < last:
            return False
        last = best
    return True


def _colex_key(order: tuple[int, ...]) -> tuple[int, ...]:
    positions = [0] * len(order)
    for i, v in enumerate(order):
        positions[v] = i
    return tuple(reversed(positions))


# -- ordinal sampling ---------------------------------------------------------


def sample_ordinal_below_omega4(rng: random.Random) -> Ordinal:
    exponents = sorted(rng.sample(range(4), rng.randint(0, 4)), reverse=True)
    return Ordinal(tuple((Ordinal.from_int(e), rng.randint(1, 9)) for e in exponents))


def _local_quot_rem(a: Ordinal) -> tuple[Ordinal, int]:
    """Independent decomposition a = w*b + n for finite-exponent ordinals."""
    n = 0
    terms = []
    for e, c in a.terms:
        ei = e.to_int()
        if ei == 0:
            n = c
        else:
            terms.append((Ordinal.from_int(ei - 1), c))
    return Ordinal(tuple(terms)), n


# -- criteria -----------------------------------------------------------------


def criterion_golden_triple() -> None:
    """Exact search and breadth-first outputs on the 6-vertex cycle-and-tail
    graph, including the relabel-then-search composition."""
    g = SIX_CYCLE_TAIL
    beta = bfs_search(g).visit_order
    tau = deterministic_search(g).visit_order
    assert beta == (0, 1, 5, 2, 3, 4), beta
    assert tau == (0, 1, 2, 4, 5, 3), tau
    replayed = bfs_search(relabel(g, tau)).visit_order
    mapped_back = tuple(tau[v] for v in replayed)
    assert mapped_back == (0, 1, 5, 2, 4, 3), mapped_back


def criterion_zeta_formula() -> None:
    """The bound function agrees with w^b*(n+1) on 10,000 samples below w^4
    and satisfies monotonicity, the sum bound, the product identity at limits
    and limit continuity through fundamental sequences."""
    rng = random.Random(2024)
    samples = [sample_ordinal_below_omega4(rng) for _ in range(10_000)]
    for a in samples:
        beta, n = _local_quot_rem(a)
        assert omega_quot_rem(a) == (beta, n)
        expected = a if a.is_finite else omega_power(beta) * Ordinal.from_int(n + 1)
        assert zeta(a) == expected, a
    for a, b in zip(samples, samples[1:]):
        lo, hi = (a, b) if a <= b else (b, a)
        assert zeta(lo) <= zeta(hi)
        if not a.is_zero:
            assert zeta(a + b) <= zeta(a) * zeta(ONE + b)
        if cofinality(a) == OMEGA:
            assert zeta(a + b) == zeta(a) * zeta(ONE + b)
    slack = 8
    checked = 0
    for beta in samples:
        if not beta.is_limit:
            continue
        if checked >= 300:
            break
        checked += 1
        zb = zeta(beta)
        values = [zeta(fundamental_sequence(beta, i)) for i in range(10 + slack + 1)]
        for i, v in enumerate(values):
            assert v < zb
            if i:
                assert values[i - 1] < v
        for j in range(10):
            target = fundamental_sequence(zb, j)
            assert any(target <= values[i] for i in range(j + slack + 1))
    assert checked >= 200


def criterion_lex_colex_exhaustive() -> None:
    """On every labeled connected graph with at most 6 vertices the search
    output is the lex-least traversal from 0, its inverse is colex-greatest,
    and the breadth-first output is lex-least among breadth-first traversals;
    the other side of every comparison is permutation filtering."""
    for n in range(1, 7):
        count = 0
        for adj in iter_connected_adjacency(n):
            count += 1
            g = graph_from_adjacency(adj)
            tau = deterministic_search(g).visit_order
            beta = bfs_search(g).visit_order
            traversals = [
                (0,) + rest
                for rest in itertools.permutations(range(1, n))
                if _prefix_connected_throughout(adj, (0,) + rest)
            ]
            assert tau == min(traversals), (g, tau)
            assert tau == max(traversals, key=_colex_key), (g, tau)
            bf = [t for t in traversals if _monotone_parents(adj, t)]
            assert beta == min(bf), (g, beta)
        assert count == CONNECTED_GRAPH_COUNTS[n], (n, count)


def criterion_alt_equivalence() -> None:
    """The divide-and-conquer traversal equals deterministic search:
    exhaustively at n <= 5, on 20,000 sampled graphs with n <= 7, and on
    1,000 random graphs with n <= 14."""
    for n in range(1, 6):
        for adj in iter_connected_adjacency(n):
            g = graph_from_adjacency(adj)
            assert alt_search(g) == deterministic_search(g).visit_order
    rng = random.Random(404)
    for _ in range(20_000):
        g = random_connected_graph(rng.randint(1, 7), rng.uniform(0.1, 1.0), rng.randrange(1 << 30))
        start = rng.randrange(g.vertex_count)
        assert alt_search(g, start) == deterministic_search(g, start).visit_order
    for _ in range(1_000):
        g = random_connected_graph(rng.randint(1, 14), rng.uniform(0.05, 0.9), rng.randrange(1 << 30))
        start = rng.randrange(g.vertex_count)
        assert alt_search(g, start) == deterministic_search(g, start).visit_order


def criterion_fixed_point_laws() -> None:
    """Search fixes traversals, is idempotent, fixes breadth-first outputs,
    and both tree retraversal laws hold, on 5,000 random connected graphs."""
    rng = random.Random(505)
    for _ in range(5_000):
        g = random_connected_graph(rng.randint(1, 20), rng.uniform(0.1, 0.9), rng.randrange(1 << 30))
        identity = tuple(range(g.vertex_count))
        tau = deterministic_search(g).visit_order
        beta = bfs_search(g).visit_order
        if is_traversal(g, identity):
            assert tau == identity
        assert deterministic_search(relabel(g, tau)).visit_order == identity
        assert deterministic_search(relabel(g, beta)).visit_order == identity
        assert deterministic_search(traversal_tree(g, tau)).visit_order == tau
        assert bfs_search(traversal_tree(g, beta)).visit_order == beta


def criterion_stability() -> None:
    """Subset stability on 10,000 sampled parent-closed sets and quotient
    stability on every witness block partition."""
    rng = random.Random(606)
    total = 0
    while total < 10_000:
        g = random_connected_graph(rng.randint(2, 12), rng.uniform(0.15, 0.8), rng.randrange(1 << 30))
        for w in closure_samples(g, rng.randrange(1 << 30), 25):
            assert verify_subset_stability(g, w), (g, w)
            total += 1
    for m, n, k in _witness_grid():
        b = build_zeta_witness(m, n, k)
        assert verify_quotient_stability(b.graph, [set(blk.members) for blk in b.blocks]), (m, n, k)


def _witness_grid() -> Iterator[tuple[int, int, int]]:
    for m in range(0, 3):
        for n in range(0, 4):
            if m + n == 0:
                continue
            for k in range(1, 21):
                yield m, n, k
    for n in range(0, 2):
        for k in range(1, 9):
            yield 3, n, k


def criterion_witness_suite() -> None:
    """Every in-envelope witness build passes all four certificate checks; in
    particular the compositionally predicted traversal equals the search
    output exactly."""
    for m, n, k in _witness_grid():
        verdict = verify_witness(build_zeta_witness(m, n, k))
        assert verdict.all_pass(), (m, n, k, verdict)


def criterion_bfs_levels() -> None:
    """Complete b-ary trees under 50 random input orders: levels are
    intervals in order with exact sizes b^i and parents one level up."""
    rng = random.Random(808)
    for b in (2, 3, 4):
        for d in range(1, 7):
            tree = build_bfs_tree_witness(b, d)
            expected_sizes = [b**i for i in range(d + 1)]
            orders = [tuple(range(tree.vertex_count))]
            for _ in range(50):
                perm = list(range(tree.vertex_count))
                rng.shuffle(perm)
                orders.append(tuple(perm))
            for perm in orders:
                g = relabel(tree, perm)
                root = perm.index(0)
                visit = bfs_search(g, root).visit_order
                levels, verdict = level_decomposition(g, visit, root)
                assert verdict.all_pass(), (b, d, perm)
                assert [len(l) for l in levels] == expected_sizes


def criterion_predicate_equivalences() -> None:
    """Exhaustively on all permutations of all connected graphs with n <= 5:
    prefix connectivity agrees with the earlier-neighbor form, and on
    traversals the triple breadth-first condition agrees with parent
    monotonicity."""
    for n in range(1, 6):
        for adj in iter_connected_adjacency(n):
            g = graph_from_adjacency(adj)
            for perm in itertools.permutations(range(n)):
                t = is_traversal(g, perm)
                assert t == has_decreasing_neighbors(g, perm)
                if t:
                    assert breadth_first_triple_condition(g, perm) == is_breadth_first(g, perm)


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    budget_seconds: float
    run: Callable[[], None]


CRITERIA: tuple[Criterion, ...] = (
    Criterion(1, "golden-triple", 1.0, criterion_golden_triple),
    Criterion(2, "zeta-formula", 10.0, criterion_zeta_formula),
    Criterion(3, "lex-colex-exhaustive", 180.0, criterion_lex_colex_exhaustive),
    Criterion(4, "alt-equivalence", 120.0, criterion_alt_equivalence),
    Criterion(5, "fixed-point-laws", 60.0, criterion_fixed_point_laws),
    Criterion(6, "stability", 60.0, criterion_stability),
    Criterion(7, "witness-suite", 60.0, criterion_witness_suite),
    Criterion(8, "bfs-levels", 30.0, criterion_bfs_levels),
    Criterion(9, "predicate-equivalences", 30.0, criterion_predicate_equivalences),
)


def run_criterion(criterion: Criterion) -> tuple[bool, float, str]:
    """Execute one criterion; returns (passed, elapsed seconds, detail)."""
    start = time.perf_counter()
    try:
        criterion.run()
    except AssertionError as exc:
        return False, time.perf_counter() - start, str(exc)
    return True, time.perf_counter() - start, ""


def run_all(report: Callable[[str], None] = print) -> bool:
    """Run the whole suite, printing one verdict line per criterion."""
    all_ok = True
    for criterion in CRITERIA:
        ok, elapsed, detail = run_criterion(criterion)
        in_budget = elapsed <= criterion.budget_seconds
        verdict = "PASS" if ok and in_budget else "FAIL"
        line = f"criterion {criterion.number} {criterion.name}: {verdict} ({elapsed:.2f}s)"
        if ok and not in_budget:
            line += f" [exceeded budget of {criterion.budget_seconds:.0f}s]"
        if detail:
            line += f" [{detail[:120]}]"
        report(line)
        all_ok = all_ok and ok and in_budget
    return all_ok
