"""Immutable graphs with bitset adjacency rows, counting primitives, and generators.

Vertices are dense indices 0..n-1. Each adjacency row is a Python int used
as a bitset, so adjacency tests, neighborhood intersections, and popcounts
are single word-parallel operations.

Path-counting convention: `count_induced_p3` counts induced paths with
three edges (four vertices), indexing paths by edge count.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .rng import Stream

__all__ = [
    "Graph",
    "Digraph",
    "PartLabeling",
    "complement",
    "induced_subgraph",
    "count_triangles",
    "count_induced_p3",
    "count_induced_c5",
    "sample_vertices",
    "gnp",
    "random_cograph",
    "flip_pairs",
    "empty_graph",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "iter_bits",
    "naive_induced_count",
    "is_path_4",
    "is_cycle_5",
    "pair_count",
    "pair_from_index",
    "C5_EXACT_BOUND",
]

# Exact induced-C5 counting is refused above this vertex count; use the
# sampling estimator in ptlab.testers instead.
C5_EXACT_BOUND = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph; immutable after construction."""

    __slots__ = ("n", "rows", "_m")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        rows = tuple(int(r) for r in rows)
        for u, row in enumerate(rows):
            if row < 0 or row >> n:
                raise ValueError(f"row {u} has bits outside 0..{n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not (rows[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.rows = rows
        self._m = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @property
    def m(self) -> int:
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographic."""
        for u in range(self.n):
            for v in iter_bits(self.rows[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def with_toggled(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with each listed pair's edge/non-edge status flipped."""
        rows = list(self.rows)
        for u, v in pairs:
            if u == v:
                raise ValueError(f"cannot toggle self-pair ({u},{v})")
            rows[u] ^= 1 << v
            rows[v] ^= 1 << u
        return Graph(self.n, rows)

    def key(self) -> tuple[int, ...]:
        """Hashable adjacency encoding (used for memoization and tie-breaks)."""
        return self.rows

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # pickling support (rows are validated again on rebuild; cheap at desk scale)
    def __reduce__(self):
        return (Graph, (self.n, self.rows))


class Digraph:
    """Directed graph; row(u) holds the out-neighbors of u. No self-arcs.

    Antiparallel arc pairs are representable; whether they are legal is the
    poset recognizer's business, not the type's.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        if len(rows) != n:
            raise ValueError(f"expected {n} arc rows, got {len(rows)}")
        rows = tuple(int(r) for r in rows)
        for u, row in enumerate(rows):
            if row < 0 or row >> n:
                raise ValueError(f"row {u} has bits outside 0..{n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"self-arc at vertex {u}")
        self.n = n
        self.rows = rows

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-arc ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
        return cls(n, rows)

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.rows[u]):
                yield (u, v)

    def induced(self, vertices: Iterable[int]) -> "Digraph":
        vs = sorted(set(vertices))
        _check_subset(vs, self.n)
        pos = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        mask = 0
        for v in vs:
            mask |= 1 << v
        for i, v in enumerate(vs):
            for w in iter_bits(self.rows[v] & mask):
                rows[i] |= 1 << pos[w]
        return Digraph(len(vs), rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Digraph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(("digraph", self.n, self.rows))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (Digraph, (self.n, self.rows))


@dataclass(frozen=True)
class PartLabeling:
    """Named, disjoint vertex parts covering 0..n-1, in a fixed order.

    The part order is meaningful: it defines the linear order used by
    order-transitivity checks (all of part i before all of part j for i<j).
    """

    n: int
    names: tuple[str, ...]
    parts: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, named_parts: Sequence[tuple[str, Iterable[int]]],
                 allow_empty: bool = False):
        names = tuple(name for name, _ in named_parts)
        parts = tuple(tuple(sorted(set(vs))) for _, vs in named_parts)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate part names in {names}")
        seen = 0
        for name, part in zip(names, parts):
            if not part and not allow_empty:
                raise ValueError(f"part {name} is empty")
            for v in part:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range in part {name}")
                if (seen >> v) & 1:
                    raise ValueError(f"vertex {v} appears in two parts")
                seen |= 1 << v
        if seen != (1 << n) - 1:
            missing = [v for v in range(n) if not (seen >> v) & 1]
            raise ValueError(f"parts do not cover all vertices; missing {missing}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "parts", parts)

    def part(self, name: str) -> tuple[int, ...]:
        return self.parts[self.names.index(name)]

    def part_mask(self, name: str) -> int:
        mask = 0
        for v in self.part(name):
            mask |= 1 << v
        return mask

    def part_index_of(self) -> list[int]:
        """Array mapping vertex -> index of its part in the part order."""
        idx = [0] * self.n
        for i, part in enumerate(self.parts):
            for v in part:
                idx[v] = i
        return idx

    def relabel(self, names: Sequence[str]) -> "PartLabeling":
        """Same parts under new names (e.g. X,Y,Z -> V2,V3,V5)."""
        if len(names) != len(self.parts):
            raise ValueError(f"need {len(self.parts)} names, got {len(names)}")
        return PartLabeling(self.n, list(zip(names, self.parts)), allow_empty=True)

    def restrict(self, vertices: Iterable[int]) -> "PartLabeling":
        """Labeling induced on a vertex subset, reindexed like induced_subgraph."""
        vs = sorted(set(vertices))
        _check_subset(vs, self.n)
        pos = {v: i for i, v in enumerate(vs)}
        keep = set(vs)
        named = [(name, [pos[v] for v in part if v in keep])
                 for name, part in zip(self.names, self.parts)]
        return PartLabeling(len(vs), named, allow_empty=True)


def _check_subset(vs: Sequence[int], n: int) -> None:
    if vs and (vs[0] < 0 or vs[-1] >= n):
        raise ValueError(f"vertex set {vs[:8]}... out of range for n={n}")


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = [(full ^ g.rows[v]) & ~(1 << v) for v in range(g.n)]
    return Graph(g.n, rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on `vertices`, reindexed in ascending vertex order."""
    vs = sorted(set(vertices))
    _check_subset(vs, g.n)
    pos = {v: i for i, v in enumerate(vs)}
    mask = 0
    for v in vs:
        mask |= 1 << v
    rows = [0] * len(vs)
    for i, v in enumerate(vs):
        for w in iter_bits(g.rows[v] & mask):
            rows[i] |= 1 << pos[w]
    return Graph(len(vs), rows)


def count_triangles(g: Graph) -> int:
    """Number of vertex triples inducing K3 (row-intersection popcounts)."""
    total = 0
    for u in range(g.n):
        for v in iter_bits(g.rows[u] >> (u + 1)):
            v += u + 1
            above_v = -1 << (v + 1)
            total += (g.rows[u] & g.rows[v] & above_v).bit_count()
    return total


def count_induced_p3(g: Graph) -> int:
    """Number of 4-vertex subsets inducing a path with three edges.

    Iterates over the middle edge {u,v}: endpoints a ~ u only and d ~ v only,
    with a,d non-adjacent. Each induced path has a unique middle edge.
    """
    total = 0
    for u in range(g.n):
        for v in iter_bits(g.rows[u] >> (u + 1)):
            v += u + 1
            a_side = g.rows[u] & ~g.rows[v] & ~(1 << v)
            d_side = g.rows[v] & ~g.rows[u] & ~(1 << u)
            d_count = d_side.bit_count()
            for a in iter_bits(a_side):
                total += d_count - (d_side & g.rows[a]).bit_count()
    return total


def count_induced_c5(g: Graph, exact_bound: int = C5_EXACT_BOUND) -> int:
    """Number of 5-vertex subsets inducing a 5-cycle. Exact; refuses large n.

    Canonical enumeration: v0 is the cycle's minimum vertex, its two cycle
    neighbors v1 < v4, then v2 ~ v1 and v3 ~ v2,v4 subject to the C5
    non-adjacency pattern, so each copy is generated exactly once.
    """
    if g.n > exact_bound:
        raise ValueError(
            f"exact induced-C5 count refused for n={g.n} > {exact_bound}; "
            "use the sampling estimator")
    total = 0
    rows = g.rows
    for v0 in range(g.n):
        above = -1 << (v0 + 1)
        nbrs = rows[v0] & above
        for v1 in iter_bits(nbrs):
            for v4 in iter_bits(nbrs >> (v1 + 1)):
                v4 += v1 + 1
                if (rows[v1] >> v4) & 1:
                    continue
                v2s = rows[v1] & ~rows[v0] & ~rows[v4] & above & ~(1 << v4)
                for v2 in iter_bits(v2s):
                    v3s = (rows[v2] & rows[v4] & ~rows[v0] & ~rows[v1]
                           & above & ~(1 << v2))
                    total += v3s.bit_count()
    return total


def sample_vertices(n: int, d: int, rng: Stream) -> tuple[int, ...]:
    """Uniform d-subset of 0..n-1, without replacement, sorted."""
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
    if d == 0:
        return ()
    if d == n:
        return tuple(range(n))
    picks = rng.gen.choice(n, size=d, replace=False)
    return tuple(sorted(int(v) for v in picks))


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_from_index(n: int, idx: int) -> tuple[int, int]:
    """Unrank a pair index in lexicographic order of (u, v), u < v."""
    u = 0
    remaining = idx
    row = n - 1
    while remaining >= row:
        remaining -= row
        u += 1
        row -= 1
    return (u, u + 1 + remaining)


def gnp(n: int, p: float, rng: Stream) -> Graph:
    """Erdos-Renyi G(n, p): each pair independently an edge with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0,1], got {p}")
    if p == 0.0:
        return empty_graph(n)
    if p == 1.0:
        return complete_graph(n)
    draws = rng.gen.random(pair_count(n))
    rows = [0] * n
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            if draws[idx] < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    return Graph(n, rows)


def random_cograph(n: int, rng: Stream) -> Graph:
    """Random cograph: a random cotree of disjoint unions and joins.

    Recursively splits the vertex range at a uniform point and combines the
    halves by disjoint union or join, chosen by fair coin. Every output is a
    cograph by construction (single vertices closed under union/join).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    gen = rng.gen

    def build(size: int) -> list[int]:
        if size == 1:
            return [0]
        left_size = int(gen.integers(1, size))
        left = build(left_size)
        right = build(size - left_size)
        rows = [r for r in left] + [r << left_size for r in right]
        if int(gen.integers(0, 2)) == 0:  # join
            left_mask = (1 << left_size) - 1
            right_mask = ((1 << (size - left_size)) - 1) << left_size
            for v in range(left_size):
                rows[v] |= right_mask
            for v in range(left_size, size):
                rows[v] |= left_mask
        return rows

    return Graph(n, build(n))


def flip_pairs(g: Graph, k: int, rng: Stream) -> Graph:
    """Toggle k distinct uniformly chosen vertex pairs of g."""
    total = pair_count(g.n)
    if not 0 <= k <= total:
        raise ValueError(f"need 0 <= k <= C(n,2)={total}, got {k}")
    if k == 0:
        return g
    picks = rng.gen.choice(total, size=k, replace=False)
    return g.with_toggled(pair_from_index(g.n, int(i)) for i in picks)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    """Path on n vertices (n-1 edges), 0-1-2-...-(n-1)."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs >= 3 vertices, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph.from_edges(n, edges)


def naive_induced_count(g: Graph, predicate, size: int) -> int:
    """Brute-force count of `size`-subsets whose induced subgraph satisfies
    `predicate`; the independent oracle for the counting primitives."""
    return sum(1 for vs in combinations(range(g.n), size)
               if predicate(induced_subgraph(g, vs)))


def is_path_4(h: Graph) -> bool:
    """Does a 4-vertex graph equal a path with three edges (any labeling)?"""
    return h.n == 4 and h.m == 3 and sorted(h.degree(v) for v in range(4)) == [1, 1, 2, 2]


def is_cycle_5(h: Graph) -> bool:
    """Does a 5-vertex graph equal a 5-cycle (any labeling)?

    Five vertices all of degree 2 force a single 5-cycle (no 2-cycle exists
    to complete a C3+C2 split).
    """
    return h.n == 5 and all(h.degree(v) == 2 for v in range(5))
