"""Hard-instance constructions with machine-checkable certificates.

Each construction returns a GadgetBundle: the graph (or digraph), the part
labeling, a verified witness packing certifying a farness lower bound, and
the parameters it was built from. Structural invariants are audited at
construction time; a bundle that exists is a bundle that checked out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .graphs import Digraph, Graph, PartLabeling, count_triangles, iter_bits
from .packing import (
    TRIANGLE_EXACT_MAX_N,
    TRIANGLE_EXACT_MAX_TRIANGLES,
    WitnessPacking,
    farness_lower_bound,
    greedy_c5_packing,
    triangle_packing,
    triangles_of,
)

__all__ = [
    "ApFreeSet",
    "GadgetBundle",
    "ap3_free_set",
    "rs_graph",
    "build_c5_gadget",
    "build_poset_gadget",
    "AP_EXACT_BOUND",
    "BEHREND_SCAN_BOUND",
]

AP_EXACT_BOUND = 40
BEHREND_SCAN_BOUND = 10 ** 8


@dataclass(frozen=True)
class ApFreeSet:
    """A subset of 1..ground with no 3-term arithmetic progression."""

    ground: int
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", elems)
        if elems and (elems[0] < 1 or elems[-1] > self.ground):
            raise ValueError(f"elements must lie in 1..{self.ground}")
        bad = _find_3ap(elems)
        if bad is not None:
            raise ValueError(f"3-term arithmetic progression {bad}")

    def __len__(self) -> int:
        return len(self.elements)


def _find_3ap(elems: Sequence[int]) -> tuple[int, int, int] | None:
    present = set(elems)
    for i, a in enumerate(elems):
        for b in elems[i + 1:]:
            c = 2 * b - a
            if c in present:
                return (a, b, c)
    return None


def _max_ap_free_prefix_sizes(n: int) -> list[int]:
    """sizes[m] = maximum 3-AP-free subset of any m consecutive integers.

    Shift-invariant, so sizes[m] for the window 1..m serves every window.
    Computed bottom-up; sizes[m - v] prunes the search for sizes[m].
    """
    sizes = [0] * (n + 1)
    for m in range(1, n + 1):
        best = sizes[m - 1]  # a maximum set for 1..m-1 is feasible for 1..m
        chosen: list[int] = []

        def dfs(v: int) -> None:
            nonlocal best
            if len(chosen) > best:
                best = len(chosen)
            if v > m:
                return
            # window [v..m] has m-v+1 slots; its bound is known once v >= 2
            if v > 1 and len(chosen) + sizes[m - v + 1] <= best:
                return
            # include v unless it completes a progression
            ok = True
            cs = set(chosen)
            for b in chosen:
                if 2 * b - v in cs:
                    ok = False
                    break
            if ok:
                chosen.append(v)
                dfs(v + 1)
                chosen.pop()
            dfs(v + 1)

        dfs(1)
        sizes[m] = best
    return sizes


def _ap_free_exact(n: int) -> tuple[int, ...]:
    """A maximum 3-AP-free subset of 1..n (lexicographically first optimum)."""
    sizes = _max_ap_free_prefix_sizes(n)
    target = sizes[n]
    chosen: list[int] = []

    def dfs(v: int) -> bool:
        if len(chosen) == target:
            return True
        if v > n or len(chosen) + sizes[n - v + 1] < target:
            return False
        cs = set(chosen)
        if all(2 * b - v not in cs for b in chosen):
            chosen.append(v)
            if dfs(v + 1):
                return True
            chosen.pop()
        return dfs(v + 1)

    if not dfs(1):
        raise AssertionError("exact search must reach its own optimum")
    return tuple(chosen)


def _ap_free_behrend(n: int) -> tuple[int, ...]:
    """Sphere construction: digit vectors in base 2d-1 with digits < d lying
    on a common Euclidean sphere add without carries, so a progression would
    force a midpoint on the sphere; strict convexity forbids it. The best
    (digit bound, length) pair is scanned, then greedy augmentation fills in
    whatever small integers still fit."""
    best: list[int] = []
    d = 2
    while True:
        q = 2 * d - 1
        k = 1
        while q ** (k + 1) <= n:
            k += 1
        if q ** k > n and k == 1:
            break
        if d * (q ** k) > BEHREND_SCAN_BOUND:
            break
        spheres: dict[int, list[int]] = {}
        for digits in _digit_vectors(d, k):
            val = 0
            for c in digits:
                val = val * q + c
            if val + 1 > n:
                continue
            r = sum(c * c for c in digits)
            spheres.setdefault(r, []).append(val + 1)
        if spheres:
            cand = max(spheres.values(), key=len)
            if len(cand) > len(best):
                best = cand
        d += 1
    out = sorted(best)
    present = set(out)
    for v in range(1, n + 1):
        if v in present:
            continue
        if _fits_ap_free(v, out, present):
            out.append(v)
            out.sort()
            present.add(v)
    return tuple(out)


def _digit_vectors(d: int, k: int):
    digits = [0] * k
    while True:
        yield digits
        i = k - 1
        while i >= 0 and digits[i] == d - 1:
            digits[i] = 0
            i -= 1
        if i < 0:
            return
        digits[i] += 1


def _fits_ap_free(v: int, elems: list[int], present: set[int]) -> bool:
    for a in elems:
        if a == v:
            continue
        if 2 * a - v in present:  # v, a, 2a-v with a as midpoint
            return False
        if 2 * v - a in present:  # a, v, 2v-a with v as midpoint
            return False
        if (a + v) % 2 == 0 and (a + v) // 2 in present:  # endpoint pair
            return False
    return True


def ap3_free_set(n: int, mode: str = "behrend") -> ApFreeSet:
    """A 3-AP-free subset of 1..n: maximum (exact backtracking, n <= 40) or
    the Behrend sphere construction with greedy augmentation."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if mode == "exact":
        if n > AP_EXACT_BOUND:
            raise ValueError(f"exact mode limited to n <= {AP_EXACT_BOUND}, got {n}")
        return ApFreeSet(n, _ap_free_exact(n))
    if mode == "behrend":
        return ApFreeSet(n, _ap_free_behrend(n))
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class GadgetBundle:
    """A constructed hard instance plus its certificate.

    farness is |certificate| / n^2, a verified lower bound on the normalized
    edit distance to the property the construction is far from.
    """

    graph: Union[Graph, Digraph]
    labeling: PartLabeling
    certificate: WitnessPacking
    farness: Fraction
    provenance: dict

    def __post_init__(self):
        if not self.certificate.verified:
            raise ValueError("bundle certificate must be verified")
        expect = Fraction(len(self.certificate), self.graph.n ** 2)
        if self.farness != expect:
            raise ValueError(f"farness {self.farness} != |certificate|/n^2 = {expect}")


def rs_graph(k: int, s: ApFreeSet) -> GadgetBundle:
    """Tripartite graph on 6k vertices whose every triangle is planted.

    Parts X (k), Y (2k), Z (3k); for x in 1..k and a in S the triple
    X_x, Y_{x+a}, Z_{x+2a} spans a planted triangle. Any triangle forces an
    arithmetic progression in S, so 3-AP-freeness makes the k|S| planted,
    pairwise edge-disjoint triangles the only ones; this is audited by an
    exact triangle count after construction.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if not s.elements:
        raise ValueError("difference set must be nonempty")
    if max(s.elements) > k:
        raise ValueError(f"difference set must lie in 1..{k}")
    n = 6 * k

    def x_vertex(x: int) -> int:
        return x - 1

    def y_vertex(y: int) -> int:
        return k + y - 1

    def z_vertex(z: int) -> int:
        return 3 * k + z - 1

    edges = []
    planted = []
    for x in range(1, k + 1):
        for a in s.elements:
            xv, yv, zv = x_vertex(x), y_vertex(x + a), z_vertex(x + 2 * a)
            edges.extend([(xv, yv), (yv, zv), (xv, zv)])
            planted.append((xv, yv, zv))
    g = Graph.from_edges(n, edges)
    expected = k * len(s)
    actual = count_triangles(g)
    if actual != expected:
        raise AssertionError(
            f"construction audit failed: {actual} triangles, expected {expected}")
    labeling = PartLabeling(n, [
        ("X", range(k)), ("Y", range(k, 3 * k)), ("Z", range(3 * k, 6 * k))])
    cert = WitnessPacking("triangle", tuple(sorted(planted)), n).verified_in(g)
    return GadgetBundle(
        graph=g, labeling=labeling, certificate=cert,
        farness=farness_lower_bound(cert, n),
        provenance={"construction": "rs", "k": k, "s": list(s.elements)})


def _check_tripartite(g: Graph, labeling: PartLabeling, names: Sequence[str]) -> None:
    if labeling.n != g.n:
        raise ValueError(f"labeling covers {labeling.n} vertices, graph has {g.n}")
    if tuple(labeling.names) != tuple(names):
        raise ValueError(f"expected parts {tuple(names)}, got {labeling.names}")
    for name in names:
        mask = labeling.part_mask(name)
        for v in iter_bits(mask):
            if g.rows[v] & mask:
                raise ValueError(f"part {name} is not independent (edge inside at {v})")


def build_c5_gadget(f: Graph, labeling: PartLabeling,
                    packing: WitnessPacking | None = None) -> GadgetBundle:
    """Five-part graph on 5n vertices far from induced-C5-freeness but whose
    small samples are mostly comparability graphs.

    The inner tripartite graph f (parts V2, V3, V5) sits at indices
    4n..5n-1; the outer independent parts V1 (0..2n-1) and V4 (2n..4n-1)
    have 2n vertices each. Between-part rules: V1-V2, V1-V3, V3-V4, V4-V5
    empty; V1-V4, V1-V5, V2-V4 complete; V2-V3 and V3-V5 copy f's edges;
    V2-V5 is the bipartite complement of f's. Each triangle of f plus one
    vertex from V1 and one from V4 induces a 5-cycle, and the certificate
    packs those greedily from f's triangle packing.
    """
    _check_tripartite(f, labeling, ("V2", "V3", "V5"))
    n = f.n
    if n < 1:
        raise ValueError("inner graph must have at least one vertex")
    if packing is None:
        tri_count = len(triangles_of(f))
        if n > TRIANGLE_EXACT_MAX_N or tri_count > TRIANGLE_EXACT_MAX_TRIANGLES:
            raise ValueError(
                "inner graph too large for an exact packing; supply one explicitly")
        packing = triangle_packing(f, mode="exact")
    else:
        packing = packing.verified_in(f)
    offset = 4 * n
    big_n = 5 * n
    mask = {
        "V1": (1 << (2 * n)) - 1,
        "V4": ((1 << (2 * n)) - 1) << (2 * n),
        "V2": _shift_mask(labeling.part_mask("V2"), offset),
        "V3": _shift_mask(labeling.part_mask("V3"), offset),
        "V5": _shift_mask(labeling.part_mask("V5"), offset),
    }
    rows = [0] * big_n
    # complete pairs
    for a, b in (("V1", "V4"), ("V1", "V5"), ("V2", "V4")):
        for v in iter_bits(mask[a]):
            rows[v] |= mask[b]
        for v in iter_bits(mask[b]):
            rows[v] |= mask[a]
    # copy f's edges into V2-V3 and V3-V5; complement into V2-V5
    m2, m3, m5 = (labeling.part_mask(p) for p in ("V2", "V3", "V5"))
    for u in range(n):
        ru = f.rows[u]
        um = 1 << u
        gu = offset + u
        if um & m2:
            rows[gu] |= _shift_mask(ru & m3, offset)
            rows[gu] |= _shift_mask(m5 & ~ru, offset)
        elif um & m3:
            rows[gu] |= _shift_mask(ru & (m2 | m5), offset)
        else:
            rows[gu] |= _shift_mask(ru & m3, offset)
            rows[gu] |= _shift_mask(m2 & ~ru, offset)
    g = Graph(big_n, rows)
    parts = PartLabeling(big_n, [
        ("V1", range(2 * n)),
        ("V2", (offset + v for v in iter_bits(m2))),
        ("V3", (offset + v for v in iter_bits(m3))),
        ("V4", range(2 * n, 4 * n)),
        ("V5", (offset + v for v in iter_bits(m5))),
    ], allow_empty=True)
    _audit_c5_gadget(g, parts, f, offset)
    cert = greedy_c5_packing(g, parts, packing)
    return GadgetBundle(
        graph=g, labeling=parts, certificate=cert,
        farness=farness_lower_bound(cert, big_n),
        provenance={"construction": "c5-gadget", "inner_n": n,
                    "planted": len(packing)})


def _shift_mask(mask: int, offset: int) -> int:
    return mask << offset


def _audit_c5_gadget(g: Graph, parts: PartLabeling, f: Graph, offset: int) -> None:
    """Re-check all between-part edge rules bit-exactly."""
    masks = {name: parts.part_mask(name) for name in parts.names}
    rules = {
        ("V1", "V2"): "empty", ("V1", "V3"): "empty", ("V3", "V4"): "empty",
        ("V4", "V5"): "empty", ("V1", "V4"): "complete", ("V1", "V5"): "complete",
        ("V2", "V4"): "complete", ("V2", "V3"): "inner", ("V3", "V5"): "inner",
        ("V2", "V5"): "inner-complement",
    }
    for name in parts.names:
        for v in iter_bits(masks[name]):
            if g.rows[v] & masks[name]:
                raise AssertionError(f"audit: part {name} not independent")
    for (a, b), rule in rules.items():
        for v in iter_bits(masks[a]):
            got = g.rows[v] & masks[b]
            if rule == "empty":
                want = 0
            elif rule == "complete":
                want = masks[b]
            else:
                inner = f.rows[v - offset] << offset
                if rule == "inner":
                    want = inner & masks[b]
                else:
                    want = masks[b] & ~inner
            if got != want:
                raise AssertionError(f"audit: rule {a}-{b} ({rule}) violated at {v}")


def build_poset_gadget(t: Graph, labeling: PartLabeling,
                       packing: WitnessPacking | None = None) -> GadgetBundle:
    """Directed gadget on t's vertex set: V1->V2 and V2->V3 arcs copy t's
    edges, V1->V3 arcs are t's non-edges, nothing else. A vertex set induces
    a poset exactly when it spans no triangle of t, and every triangle of t
    forces at least one pair edit, so a triangle packing certifies farness.
    """
    _check_tripartite(t, labeling, ("V1", "V2", "V3"))
    if packing is None:
        tri_count = len(triangles_of(t))
        if t.n > TRIANGLE_EXACT_MAX_N or tri_count > TRIANGLE_EXACT_MAX_TRIANGLES:
            packing = triangle_packing(t, mode="greedy")
        else:
            packing = triangle_packing(t, mode="exact")
    else:
        packing = packing.verified_in(t)
    m1, m2, m3 = (labeling.part_mask(p) for p in ("V1", "V2", "V3"))
    rows = [0] * t.n
    for u in iter_bits(m1):
        rows[u] |= t.rows[u] & m2
        rows[u] |= m3 & ~t.rows[u]
    for u in iter_bits(m2):
        rows[u] |= t.rows[u] & m3
    d = Digraph(t.n, rows)
    return GadgetBundle(
        graph=d, labeling=labeling, certificate=packing,
        farness=farness_lower_bound(packing, t.n),
        provenance={"construction": "poset-gadget", "n": t.n,
                    "packing": len(packing)})
