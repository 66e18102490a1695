"""Finite truncations of the graphs whose search traversals realize the
order-type bound, with their predicted traversals and block certificates.

The target order type is encoded by (m, n): alpha = w*m + n, and the bound
value is w^m * (n+1).  The untruncated construction splits the vertex order
into a low part S and a set T of anchors (vertex 0 plus the top of the
order), puts a path on the anchors, splits S into one piece per anchor, puts
a recursively built graph on each piece, and wires each piece's least vertex
to its anchor.  Every occurrence of "infinitely many" is replaced by the same
finite depth k:

* m = 0: a path on n+1 vertices (all anchors, no pieces);
* n = 0, m = 1: a path on k vertices, the truncated ray;
* n > 0: n+1 anchors, each carrying a truncated witness for w*m; the pieces
  interleave through the middle of the vertex order (vertex v of the middle
  belongs to piece (v-1) mod (n+1));
* n = 0, m >= 2: k anchors, each carrying a truncated witness for w*(m-1);
  the pieces are consecutive runs of the middle (row-major).

The predicted traversal is assembled compositionally: blocks follow the
anchors' order and inside a block the anchor comes first, then the piece's
own predicted traversal.  The search itself is never consulted for the
prediction; agreement with the actual search output is a checked verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import OrderedGraph, Traversal, invert_permutation, serialize
from .ordinal import OMEGA, Ordinal, zeta
from .predicates import verify_quotient_stability
from .search import deterministic_search

MAX_M = 3
MAX_N = 6
MAX_K = 64


@dataclass(frozen=True)
class Block:
    """An interval of the predicted traversal; the anchor is its first
    element."""

    anchor: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class WitnessBuild:
    graph: OrderedGraph
    predicted: Traversal
    blocks: tuple[Block, ...]
    m: int
    n: int
    k: int
    nesting_depth: int

    @property
    def alpha(self) -> Ordinal:
        """Input order type of the untruncated construction (1 + w*m + n)."""
        if self.m == 0:
            return Ordinal.from_int(self.n + 1)
        return OMEGA * Ordinal.from_int(self.m) + Ordinal.from_int(self.n)

    @property
    def zeta_value(self) -> Ordinal:
        return zeta(self.alpha)


@dataclass(frozen=True)
class WitnessVerdict:
    predicted_matches_search: bool
    blocks_are_intervals: bool
    quotient_stable: bool
    profile_matches: bool

    def all_pass(self) -> bool:
        return (
            self.predicted_matches_search
            and self.blocks_are_intervals
            and self.quotient_stable
            and self.profile_matches
        )

    def lines(self) -> list[str]:
        entries = [
            ("predicted-traversal", self.predicted_matches_search),
            ("block-intervals", self.blocks_are_intervals),
            ("quotient-stability", self.quotient_stable),
            ("zeta-profile", self.profile_matches),
        ]
        return [f"{name}: {'PASS' if ok else 'FAIL'}" for name, ok in entries]


@dataclass(frozen=True)
class _Part:
    size: int
    edges: tuple[tuple[int, int], ...]
    predicted: tuple[int, ...]
    blocks: tuple[Block, ...]
    depth: int


def _check_envelope(m: int, n: int, k: int) -> None:
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError("need m >= 0, n >= 0 and m + n >= 1")
    if m > MAX_M or n > MAX_N or not 1 <= k <= MAX_K:
        raise ValueError(
            f"parameters outside the supported envelope (m <= {MAX_M}, n <= {MAX_N}, 1 <= k <= {MAX_K})"
        )


def _anchor_layout(anchor_count: int, piece_size: int) -> tuple[int, list[int]]:
    """Total size and the anchor vertices in anchor order (vertex 0, then the
    top anchor_count - 1 vertices)."""
    total = anchor_count * (piece_size + 1)
    anchors = [0] + [total - anchor_count + 1 + j for j in range(anchor_count - 1)]
    return total, anchors


def _piece_vertices(n: int, anchor_count: int, piece_size: int, total: int) -> list[list[int]]:
    """Split the middle of the vertex order (everything between vertex 0 and
    the top anchors) into one piece per anchor: interleaved for finite tails,
    consecutive runs for the truncated-limit case."""
    middle = range(1, total - anchor_count + 1)
    if n > 0:
        return [
            [v for v in middle if (v - 1) % anchor_count == i]
            for i in range(anchor_count)
        ]
    return [
        list(middle[i * piece_size : (i + 1) * piece_size])
        for i in range(anchor_count)
    ]


def _identity_part(size: int, depth: int) -> _Part:
    edges = tuple((i, i + 1) for i in range(size - 1))
    blocks = tuple(Block(i, (i,)) for i in range(size))
    return _Part(size, edges, tuple(range(size)), blocks, depth)


def _build(m: int, n: int, k: int) -> _Part:
    if m == 0:
        return _identity_part(n + 1, 0)
    if m == 1 and n == 0:
        return _identity_part(k, 1)
    if n > 0:
        piece = _build(m, 0, k)
        anchor_count = n + 1
        depth = piece.depth
    else:
        piece = _build(m - 1, 0, k)
        anchor_count = k
        depth = piece.depth + 1
    total, anchors = _anchor_layout(anchor_count, piece.size)
    pieces = _piece_vertices(n, anchor_count, piece.size, total)
    edges = [(anchors[i], anchors[i + 1]) for i in range(anchor_count - 1)]
    predicted: list[int] = []
    blocks: list[Block] = []
    for i in range(anchor_count):
        verts = pieces[i]
        edges.append((anchors[i], verts[0]))
        edges.extend((verts[a], verts[b]) for a, b in piece.edges)
        transported = tuple(verts[j] for j in piece.predicted)
        predicted.append(anchors[i])
        predicted.extend(transported)
        blocks.append(Block(anchors[i], (anchors[i],) + transported))
    return _Part(total, tuple(edges), tuple(predicted), tuple(blocks), depth)


def build_zeta_witness(m: int, n: int, k: int) -> WitnessBuild:
    """Truncated witness for target order type w*m + n at depth k."""
    _check_envelope(m, n, k)
    part = _build(m, n, k)
    return WitnessBuild(
        graph=OrderedGraph(part.size, part.edges),
        predicted=part.predicted,
        blocks=part.blocks,
        m=m,
        n=n,
        k=k,
        nesting_depth=part.depth,
    )


def truncation_embedding(m: int, n: int, k: int) -> tuple[int, ...]:
    """Vertex map from build(m, n, k) into build(m, n, k+1).

    Entry v is the vertex of the deeper build playing the role vertex v plays
    in the shallower one: anchors map to anchors in order (the extra anchor
    of the deeper build is skipped) and pieces embed recursively.
    """
    _check_envelope(m, n, k)
    if k + 1 > MAX_K:
        raise ValueError("k + 1 leaves the supported envelope")
    return _embedding(m, n, k)


def _embedding(m: int, n: int, k: int) -> tuple[int, ...]:
    if m == 0:
        return tuple(range(n + 1))
    if m == 1 and n == 0:
        return tuple(range(k))
    if n > 0:
        sub = _embedding(m, 0, k)
        small_piece, big_piece = _build(m, 0, k), _build(m, 0, k + 1)
        anchor_count_small = anchor_count_big = n + 1
    else:
        sub = _embedding(m - 1, 0, k)
        small_piece, big_piece = _build(m - 1, 0, k), _build(m - 1, 0, k + 1)
        anchor_count_small, anchor_count_big = k, k + 1
    total_s, anchors_s = _anchor_layout(anchor_count_small, small_piece.size)
    total_b, anchors_b = _anchor_layout(anchor_count_big, big_piece.size)
    pieces_s = _piece_vertices(n, anchor_count_small, small_piece.size, total_s)
    pieces_b = _piece_vertices(n, anchor_count_big, big_piece.size, total_b)
    mapping = {}
    for i in range(anchor_count_small):
        mapping[anchors_s[i]] = anchors_b[i]
        for local, v in enumerate(pieces_s[i]):
            mapping[v] = pieces_b[i][sub[local]]
    return tuple(mapping[v] for v in range(total_s))


def verify_witness(build: WitnessBuild) -> WitnessVerdict:
    """Check the build's certificate against an actual search run."""
    actual = deterministic_search(build.graph, 0).visit_order
    predicted_ok = actual == build.predicted

    positions = invert_permutation(actual)
    blocks_ok = True
    covered: list[int] = []
    for block in build.blocks:
        covered.extend(block.members)
        ps = sorted(positions[v] for v in block.members)
        if ps[-1] - ps[0] + 1 != len(ps):
            blocks_ok = False
        if block.members[0] != block.anchor or actual[ps[0]] != block.anchor:
            blocks_ok = False
    if sorted(covered) != list(range(build.graph.vertex_count)):
        blocks_ok = False

    try:
        quotient_ok = verify_quotient_stability(
            build.graph, [set(b.members) for b in build.blocks]
        )
    except ValueError:
        quotient_ok = False

    expected_top = build.n + 1 if (build.n > 0 or build.m == 0) else build.k
    sizes = {len(b.members) for b in build.blocks}
    profile_ok = (
        len(build.blocks) == expected_top
        and len(sizes) == 1
        and build.nesting_depth == build.m
    )
    return WitnessVerdict(predicted_ok, blocks_ok, quotient_ok, profile_ok)


def build_padded_graph(g: OrderedGraph, extra: int) -> OrderedGraph:
    """Append ``extra`` new greatest vertices, each joined only to vertex 0.

    For connected g the search traversal of the result starts with the
    traversal of g and ends with the new vertices in ascending order.
    """
    if extra < 0:
        raise ValueError("extra must be >= 0")
    if extra == 0:
        return g
    n = g.vertex_count
    new_edges = g.edges + tuple((0, n + i) for i in range(extra))
    return OrderedGraph(n + extra, new_edges)


def build_bfs_tree_witness(branching: int, depth: int) -> OrderedGraph:
    """Complete ``branching``-ary tree of the given depth, vertices numbered
    level by level with the root 0."""
    if branching < 2:
        raise ValueError("branching factor must be >= 2")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if branching**depth > 10**6:
        raise ValueError("tree too large (branching**depth must be <= 10**6)")
    total = (branching ** (depth + 1) - 1) // (branching - 1)
    internal = (branching**depth - 1) // (branching - 1)
    edges = tuple(
        (v, branching * v + 1 + j) for v in range(internal) for j in range(branching)
    )
    return OrderedGraph(total, edges)


def format_manifest(build: WitnessBuild, verdict: WitnessVerdict | None = None) -> str:
    """Printable witness certificate: parameters, the graph, the predicted
    traversal and one line per block."""
    lines = [
        f"witness m={build.m} n={build.n} k={build.k} "
        f"alpha={build.alpha} zeta={build.zeta_value}",
        "# truncated construction; the block certificate is evidence, not proof",
    ]
    lines.append(serialize(build.graph).rstrip("\n"))
    lines.append("predicted: " + " ".join(map(str, build.predicted)))
    for block in build.blocks:
        lines.append(
            f"block: anchor={block.anchor} members=" + " ".join(map(str, block.members))
        )
    return "\n".join(lines) + "\n"
