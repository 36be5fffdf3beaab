"""Edge-disjoint triangle packings, triangle edge covers, and witness packings.

A witness packing certifies a farness lower bound: its tuples induce the
forbidden structure and overlap so little (edge-disjoint triangles, or
5-tuples sharing at most one vertex) that one pair edit destroys at most
one tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .graphs import Graph, PartLabeling, induced_subgraph, is_cycle_5, iter_bits
from .rng import Stream

__all__ = [
    "PackingError",
    "WitnessPacking",
    "triangles_of",
    "triangle_packing",
    "triangle_cover",
    "greedy_c5_packing",
    "farness_lower_bound",
    "random_tripartite_extract",
    "tripartition_retention_samples",
    "TRIANGLE_EXACT_MAX_TRIANGLES",
    "TRIANGLE_EXACT_MAX_N",
]

TRIANGLE_EXACT_MAX_TRIANGLES = 10_000
TRIANGLE_EXACT_MAX_N = 14


class PackingError(ValueError):
    """A packing failed verification or construction."""


@dataclass(frozen=True)
class WitnessPacking:
    """A list of vertex tuples certifying a farness lower bound.

    kind "triangle": 3-tuples, pairwise edge-disjoint.
    kind "inducedC5": 5-tuples, pairwise sharing at most one vertex.
    """

    kind: str
    tuples: tuple[tuple[int, ...], ...]
    host_n: int
    verified: bool = False

    def __post_init__(self):
        if self.kind not in ("triangle", "inducedC5"):
            raise ValueError(f"unknown packing kind {self.kind!r}")
        size = 3 if self.kind == "triangle" else 5
        for t in self.tuples:
            if len(t) != size or len(set(t)) != size:
                raise ValueError(f"{self.kind} tuple {t} must have {size} distinct vertices")
            if min(t) < 0 or max(t) >= self.host_n:
                raise ValueError(f"tuple {t} out of range for host_n={self.host_n}")

    def __len__(self) -> int:
        return len(self.tuples)

    @property
    def overlap_rule(self) -> str:
        return "edge-disjoint" if self.kind == "triangle" else "share-at-most-one-vertex"

    def verified_in(self, g: Graph) -> "WitnessPacking":
        """Re-verify every tuple and the pairwise overlap rule in `g`."""
        if g.n != self.host_n:
            raise PackingError(f"host has {g.n} vertices, packing says {self.host_n}")
        if self.kind == "triangle":
            for a, b, c in self.tuples:
                if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
                    raise PackingError(f"tuple {(a, b, c)} is not a triangle")
            edge_sets = [{frozenset(p) for p in ((a, b), (b, c), (a, c))}
                         for a, b, c in self.tuples]
            for i in range(len(edge_sets)):
                for j in range(i + 1, len(edge_sets)):
                    if edge_sets[i] & edge_sets[j]:
                        raise PackingError(f"tuples {i} and {j} share an edge")
        else:
            for t in self.tuples:
                if not is_cycle_5(induced_subgraph(g, t)):
                    raise PackingError(f"tuple {t} does not induce a 5-cycle")
            vsets = [set(t) for t in self.tuples]
            for i in range(len(vsets)):
                for j in range(i + 1, len(vsets)):
                    if len(vsets[i] & vsets[j]) > 1:
                        raise PackingError(f"tuples {i} and {j} share two vertices")
        return replace(self, verified=True)

    def to_json(self) -> dict:
        return {"kind": self.kind, "tuples": [list(t) for t in self.tuples],
                "host_n": self.host_n, "verified": self.verified}

    @classmethod
    def from_json(cls, data: dict) -> "WitnessPacking":
        return cls(data["kind"], tuple(tuple(t) for t in data["tuples"]),
                   data["host_n"], data.get("verified", False))


def triangles_of(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles (u, v, w) with u < v < w, lexicographic."""
    tris = []
    for u in range(g.n):
        for v in iter_bits(g.rows[u] >> (u + 1)):
            v += u + 1
            above = -1 << (v + 1)
            for w in iter_bits(g.rows[u] & g.rows[v] & above):
                tris.append((u, v, w))
    return tris


def _edge_masks(g: Graph, tris: Sequence[tuple[int, int, int]]
                ) -> tuple[list[int], dict[tuple[int, int], int]]:
    """Per-triangle bitmasks over a deterministic index of triangle edges."""
    index: dict[tuple[int, int], int] = {}
    for t in tris:
        for p in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
            if p not in index:
                index[p] = len(index)
    masks = [(1 << index[(a, b)]) | (1 << index[(b, c)]) | (1 << index[(a, c)])
             for a, b, c in tris]
    return masks, index


def _guard_exact(g: Graph, tris: Sequence) -> None:
    if g.n > TRIANGLE_EXACT_MAX_N:
        raise ValueError(f"exact mode limited to n <= {TRIANGLE_EXACT_MAX_N}, got {g.n}")
    if len(tris) > TRIANGLE_EXACT_MAX_TRIANGLES:
        raise ValueError(
            f"exact mode limited to {TRIANGLE_EXACT_MAX_TRIANGLES} triangles, "
            f"got {len(tris)}")


def triangle_packing(g: Graph, mode: str = "exact",
                     rng: Stream | None = None) -> WitnessPacking:
    """Maximum (exact) or maximal (greedy) family of edge-disjoint triangles.

    Exact mode is branch-and-bound over the lexicographic triangle list with
    a compatible-remainder bound; greedy scans lexicographically, or in a
    random order when a stream is supplied, and lower-bounds the maximum.
    """
    tris = triangles_of(g)
    if mode == "greedy":
        order = list(range(len(tris)))
        if rng is not None:
            rng.gen.shuffle(order)
        used: set[frozenset] = set()
        chosen = []
        for i in order:
            a, b, c = tris[i]
            edges = {frozenset((a, b)), frozenset((b, c)), frozenset((a, c))}
            if not (edges & used):
                used |= edges
                chosen.append(tris[i])
        chosen.sort()
        return WitnessPacking("triangle", tuple(chosen), g.n).verified_in(g)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    _guard_exact(g, tris)
    conflict = _conflict_masks(g, tris)
    emasks, eindex = _edge_masks(g, tris)
    hit = [0] * len(eindex)  # edge bit -> mask of triangles through it
    for i, m in enumerate(emasks):
        for b in iter_bits(m):
            hit[b] |= 1 << i
    t_count = len(tris)
    full = (1 << t_count) - 1

    best_set: list[int] = []
    avail0 = full
    while avail0:  # greedy seed for early pruning
        i = (avail0 & -avail0).bit_length() - 1
        best_set.append(i)
        avail0 &= ~conflict[i] & ~(1 << i)
    chosen: list[int] = []

    # branch on the lowest edge still usable: either one of its triangles is
    # in the packing, or none is; bound remaining picks by available
    # triangles and by spanned edges / 3
    def dfs(avail: int) -> None:
        nonlocal best_set
        if not avail:
            if len(chosen) > len(best_set):
                best_set = chosen.copy()
            return
        count = 0
        edges = 0
        a = avail
        while a:
            low = a & -a
            count += 1
            edges |= emasks[low.bit_length() - 1]
            a ^= low
        if len(chosen) + min(count, edges.bit_count() // 3) <= len(best_set):
            return
        e = (edges & -edges).bit_length() - 1
        through = hit[e] & avail
        for t in iter_bits(through):
            chosen.append(t)
            dfs(avail & ~conflict[t] & ~(1 << t))
            chosen.pop()
        dfs(avail & ~through)

    dfs(full)
    best_set.sort()
    return WitnessPacking("triangle", tuple(tris[i] for i in best_set), g.n).verified_in(g)


def _conflict_masks(g: Graph, tris: Sequence[tuple[int, int, int]]) -> list[int]:
    """conflict[i] = bitmask of triangle indices sharing an edge with i."""
    edge_masks, index = _edge_masks(g, tris)
    by_edge = [0] * len(index)
    for i, m in enumerate(edge_masks):
        for b in iter_bits(m):
            by_edge[b] |= 1 << i
    out = []
    for i, m in enumerate(edge_masks):
        c = 0
        for b in iter_bits(m):
            c |= by_edge[b]
        out.append(c & ~(1 << i))
    return out


def triangle_cover(g: Graph, mode: str = "exact") -> tuple[tuple[int, int], ...]:
    """Edges covering every triangle.

    "exact": a minimum cover by branch-and-bound over an uncovered triangle's
    three edges, lower-bounded by an edge-disjoint packing of the uncovered
    triangles. "from_packing": all edges of a maximum packing (the 3*tau
    upper bound; deleting them leaves the graph triangle-free).
    """
    tris = triangles_of(g)
    if not tris:
        return ()
    if mode == "from_packing":
        packing = triangle_packing(g, mode="exact")
        edges = {tuple(sorted(p)) for t in packing.tuples
                 for p in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2]))}
        return tuple(sorted(edges))
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    _guard_exact(g, tris)
    _, index = _edge_masks(g, tris)
    edge_of_bit = {i: e for e, i in index.items()}
    tri_edges = [[index[(a, b)], index[(b, c)], index[(a, c)]] for a, b, c in tris]
    conflict = _conflict_masks(g, tris)
    # hit[e] = triangles through edge e, as a triangle-index mask
    hit = [0] * len(index)
    for i, es in enumerate(tri_edges):
        for e in es:
            hit[e] |= 1 << i

    def packing_bound(uncovered: int) -> int:
        count = 0
        while uncovered:
            low = uncovered & -uncovered
            i = low.bit_length() - 1
            count += 1
            uncovered &= ~conflict[i] & ~low
        return count

    # initial feasible cover: all edges of a maximal greedy packing
    greedy_edges: list[int] = []
    avail = (1 << len(tris)) - 1
    while avail:
        i = (avail & -avail).bit_length() - 1
        greedy_edges.extend(tri_edges[i])
        avail &= ~conflict[i] & ~(1 << i)
    best = greedy_edges
    chosen: list[int] = []

    def dfs(uncovered: int) -> None:
        nonlocal best
        if not uncovered:
            if len(chosen) < len(best):
                best = chosen.copy()
            return
        if len(chosen) + packing_bound(uncovered) >= len(best):
            return
        target = (uncovered & -uncovered).bit_length() - 1
        for e in tri_edges[target]:
            chosen.append(e)
            dfs(uncovered & ~hit[e])
            chosen.pop()

    dfs((1 << len(tris)) - 1)
    return tuple(sorted(edge_of_bit[e] for e in best))


def greedy_c5_packing(gadget: Graph, labeling: PartLabeling,
                      planted: WitnessPacking) -> WitnessPacking:
    """Extend each planted triangle of the inner tripartite graph to an
    induced 5-cycle using one fresh vertex from each of the two outer parts.

    For triangle i, vertices of the outer parts already used by an earlier
    5-tuple whose triangle meets triangle i are banned, and the chosen
    (outer1, outer2) pair must be unused; the lexicographically least
    eligible pair is taken. Fails loudly if the pool runs dry, which signals
    inconsistent inputs (e.g. planted triangles that are not edge-disjoint).
    """
    if planted.kind != "triangle":
        raise PackingError("planted packing must be triangles")
    if gadget.n % 5:
        raise PackingError(f"gadget must have 5n vertices, got {gadget.n}")
    n = gadget.n // 5
    if planted.host_n != n:
        raise PackingError(
            f"planted packing lives on {planted.host_n} vertices, inner graph has {n}")
    offset = 4 * n
    pool1 = labeling.part("V1")
    pool4 = labeling.part("V4")
    chosen: list[tuple[tuple[int, int, int], int, int]] = []
    for tri in planted.tuples:
        tri_set = set(tri)
        banned1 = {v1 for t, v1, _ in chosen if tri_set & set(t)}
        banned4 = {v4 for t, _, v4 in chosen if tri_set & set(t)}
        used_pairs = {(v1, v4) for _, v1, v4 in chosen}
        pick = None
        for v1 in pool1:
            if v1 in banned1:
                continue
            for v4 in pool4:
                if v4 not in banned4 and (v1, v4) not in used_pairs:
                    pick = (v1, v4)
                    break
            if pick:
                break
        if pick is None:
            raise PackingError(
                f"vertex pool exhausted at triangle {tri}; planted packing inconsistent")
        chosen.append((tri, pick[0], pick[1]))
    tuples = tuple(tuple(sorted((offset + a, offset + b, offset + c, v1, v4)))
                   for (a, b, c), v1, v4 in chosen)
    return WitnessPacking("inducedC5", tuples, gadget.n).verified_in(gadget)


def farness_lower_bound(packing: WitnessPacking, n: int) -> Fraction:
    """|tuples| / n^2: a certified lower bound on the normalized edit
    distance to the matching freeness property (each pair edit destroys at
    most one tuple under the overlap rule)."""
    if not packing.verified:
        raise PackingError("farness bound requires a verified packing")
    if n != packing.host_n:
        raise ValueError(f"n={n} does not match packing host_n={packing.host_n}")
    return Fraction(len(packing.tuples), n * n)


def _apply_tripartition(g: Graph, assign: Sequence[int],
                        packing: WitnessPacking) -> tuple[Graph, list]:
    rows = [0] * g.n
    for u in range(g.n):
        for v in iter_bits(g.rows[u]):
            if assign[u] != assign[v]:
                rows[u] |= 1 << v
    retained = [t for t in packing.tuples
                if {assign[t[0]], assign[t[1]], assign[t[2]]} == {0, 1, 2}]
    return Graph(g.n, rows), retained


def random_tripartite_extract(g: Graph, packing: WitnessPacking, rng: Stream,
                              retries: int = 1,
                              parts: PartLabeling | None = None
                              ) -> tuple[Graph, PartLabeling, WitnessPacking]:
    """Drop intra-part edges of a tripartition, keeping the packing triangles
    with one vertex per part; the best of `retries` uniform draws is
    returned. Supplying `parts` forces the assignment (retention is then
    deterministic, e.g. 1 for an aligned tripartite input)."""
    if packing.kind != "triangle" or not packing.verified:
        raise PackingError("need a verified triangle packing of the host")
    if parts is not None:
        if len(parts.parts) != 3:
            raise ValueError("forced assignment needs exactly three parts")
        assign = parts.part_index_of()
        best = _apply_tripartition(g, assign, packing)
        best_assign = assign
    else:
        if retries < 1:
            raise ValueError("retries must be >= 1")
        best = None
        best_assign = None
        for r in range(retries):
            assign = [int(a) for a in rng.child(r).gen.integers(0, 3, size=g.n)]
            cand = _apply_tripartition(g, assign, packing)
            if best is None or len(cand[1]) > len(best[1]):
                best = cand
                best_assign = assign
    f_graph, retained = best
    names = ("X", "Y", "Z")
    labeling = PartLabeling(
        g.n, [(names[i], [v for v in range(g.n) if best_assign[v] == i])
              for i in range(3)], allow_empty=True)
    kept = WitnessPacking("triangle", tuple(retained), g.n).verified_in(f_graph)
    return f_graph, labeling, kept


def tripartition_retention_samples(g: Graph, packing: WitnessPacking,
                                   trials: int, rng: Stream) -> list[float]:
    """Retained fraction of the packing for `trials` independent uniform
    tripartitions (statistical probe; expectation is 2/9 per triangle)."""
    if packing.kind != "triangle" or not packing.verified:
        raise PackingError("need a verified triangle packing of the host")
    if not packing.tuples:
        raise ValueError("retention fraction undefined for an empty packing")
    gen = rng.gen
    total = len(packing.tuples)
    out = []
    for _ in range(trials):
        assign = gen.integers(0, 3, size=g.n)
        kept = sum(1 for a, b, c in packing.tuples
                   if assign[a] != assign[b] and assign[b] != assign[c]
                   and assign[a] != assign[c])
        out.append(kept / total)
    return out
