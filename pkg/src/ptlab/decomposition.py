"""Sparse/dense cuts, cut refinement, and exact edit-distance oracles.

A beta-cut is a bipartition whose crossing density is at most beta (sparse)
or at least 1-beta (dense); beta = 0 gives exact cuts. Densities and beta
are compared in exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Union

from .graphs import Graph, complement, induced_subgraph, iter_bits, pair_count
from .recognizers import RecognitionResult
from .rng import Stream

__all__ = [
    "Cut",
    "NotFound",
    "Refinement",
    "AboveCap",
    "find_cut",
    "find_beta_cut",
    "refine_along_cuts",
    "distance_to_property",
    "BETA_EXACT_BOUND",
    "DISTANCE_N_BOUND",
    "DISTANCE_CAP_BOUND",
]

BETA_EXACT_BOUND = 22
DISTANCE_N_BOUND = 10
DISTANCE_CAP_BOUND = 5


@dataclass(frozen=True)
class Cut:
    """A bipartition with its crossing density and sparse/dense kind.

    `edits` is the number of pair toggles needed to make the cut exact
    (erase the crossing edges if sparse, complete them if dense).
    """

    side1: tuple[int, ...]
    side2: tuple[int, ...]
    kind: str  # "sparse" | "dense"
    crossing_density: Fraction
    edits: int

    def __post_init__(self):
        if not self.side1 or not self.side2:
            raise ValueError("both cut sides must be nonempty")
        if self.kind not in ("sparse", "dense"):
            raise ValueError(f"bad cut kind {self.kind!r}")


@dataclass(frozen=True)
class NotFound:
    """Heuristic search gave up after `effort` restarts; certifies nothing."""

    effort: int

    def __bool__(self) -> bool:
        return False


def _crossing_edges(g: Graph, mask1: int, mask2: int) -> int:
    return sum((g.rows[v] & mask2).bit_count() for v in iter_bits(mask1))


def _cut_from_mask(g: Graph, mask1: int, beta: Fraction) -> Cut | None:
    """Classify the bipartition (mask1, rest) against beta, or None."""
    full = (1 << g.n) - 1
    mask2 = full ^ mask1
    s1 = mask1.bit_count()
    s2 = g.n - s1
    prod = s1 * s2
    cross = _crossing_edges(g, mask1, mask2)
    density = Fraction(cross, prod)
    if density <= beta:
        kind, edits = "sparse", cross
    elif density >= 1 - beta:
        kind, edits = "dense", prod - cross
    else:
        return None
    return Cut(tuple(iter_bits(mask1)), tuple(iter_bits(mask2)), kind, density, edits)


def find_cut(g: Graph) -> Cut | None:
    """Exact (beta = 0) cut: exists iff g or its complement is disconnected.

    Returns the cut splitting the component of vertex 0 from the rest, which
    is also the minimum-edit, lexicographically-least exact cut.
    """
    if g.n < 2:
        raise ValueError(f"cuts need n >= 2, got {g.n}")
    full = (1 << g.n) - 1
    for rows, kind in ((g.rows, "sparse"), (complement(g).rows, "dense")):
        comp = 1
        frontier = 1
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= rows[v]
            grow &= ~comp
            comp |= grow
            frontier = grow
        if comp != full:
            density = Fraction(0) if kind == "sparse" else Fraction(1)
            return Cut(tuple(iter_bits(comp)), tuple(iter_bits(full ^ comp)),
                       kind, density, 0)
    return None


def _validate_beta(beta) -> Fraction:
    b = Fraction(beta)
    if not 0 <= b < Fraction(1, 2):
        raise ValueError(f"beta must satisfy 0 <= beta < 1/2, got {beta}")
    return b


def find_beta_cut(g: Graph, beta, mode: str = "exact",
                  rng: Stream | None = None,
                  restarts: int = 20) -> Union[Cut, None, NotFound]:
    """Find a beta-cut.

    Exact mode (n <= 22) enumerates every bipartition: the answer is a
    minimum-edit cut (ties broken by lexicographically least side1, which
    always contains vertex 0) or a definitive None. Heuristic mode runs
    randomized local search over vertex flips and returns a cut or
    NotFound(effort), which does NOT certify nonexistence.
    """
    b = _validate_beta(beta)
    if g.n < 2:
        raise ValueError(f"cuts need n >= 2, got {g.n}")
    if b == 0:
        return find_cut(g)
    if mode == "exact":
        if g.n > BETA_EXACT_BOUND:
            raise ValueError(
                f"exact beta-cut enumeration refused for n={g.n} > {BETA_EXACT_BOUND}")
        return _beta_cut_exact(g, b)
    if mode == "heuristic":
        if rng is None:
            raise ValueError("heuristic mode needs an rng stream")
        return _beta_cut_heuristic(g, b, rng, restarts)
    raise ValueError(f"unknown mode {mode!r}")


def _beta_cut_exact(g: Graph, beta: Fraction) -> Cut | None:
    best: Cut | None = None
    full = (1 << g.n) - 1
    num, den = beta.numerator, beta.denominator
    rows = g.rows
    # side1 always contains vertex 0; iterate the other n-1 membership bits
    for rest in range(1 << (g.n - 1)):
        mask1 = 1 | (rest << 1)
        if mask1 == full:
            continue
        mask2 = full ^ mask1
        s1 = mask1.bit_count()
        prod = s1 * (g.n - s1)
        cross = sum((rows[v] & mask2).bit_count() for v in iter_bits(mask1))
        # sparse: cross/prod <= beta; dense: cross/prod >= 1-beta
        if cross * den <= num * prod:
            edits = cross
        elif cross * den >= (den - num) * prod:
            edits = prod - cross
        else:
            continue
        if best is None or edits < best.edits or (
                edits == best.edits and tuple(iter_bits(mask1)) < best.side1):
            cut = _cut_from_mask(g, mask1, beta)
            assert cut is not None
            best = cut
    return best


def _beta_cut_heuristic(g: Graph, beta: Fraction, rng: Stream, restarts: int
                        ) -> Union[Cut, NotFound]:
    n = g.n
    full = (1 << n) - 1
    for attempt in range(restarts):
        gen = rng.child(attempt).gen
        side = [bool(b) for b in gen.integers(0, 2, size=n)]
        if all(side) or not any(side):
            side[0] = not side[0]
        mask1 = sum(1 << v for v in range(n) if side[v])
        for _ in range(4 * n * n):  # flip budget per restart
            cut = _cut_from_mask(g, mask1, beta)
            if cut is not None and 0 in cut.side1:
                return cut
            if cut is not None:
                # canonicalize: side1 holds vertex 0
                return _cut_from_mask(g, full ^ mask1, beta)
            # objective (float guidance only): crossing density's distance
            # from {0, 1}; the final classification above is exact
            mask2 = full ^ mask1
            cross = _crossing_edges(g, mask1, mask2)
            prod = mask1.bit_count() * mask2.bit_count()
            score = min(cross / prod, 1 - cross / prod)
            moves = []
            for v in range(n):
                vm = 1 << v
                new1 = mask1 ^ vm
                if new1 == 0 or new1 == full:
                    continue
                s1 = new1.bit_count()
                nprod = s1 * (n - s1)
                if vm & mask1:
                    ncross = cross - (g.rows[v] & mask2).bit_count() \
                        + (g.rows[v] & (mask1 & ~vm)).bit_count()
                else:
                    ncross = cross - (g.rows[v] & mask1).bit_count() \
                        + (g.rows[v] & (mask2 & ~vm)).bit_count()
                nscore = min(ncross / nprod, 1 - ncross / nprod)
                if nscore < score:
                    moves.append((nscore, v))
            if not moves:
                break
            moves.sort()
            best_score = moves[0][0]
            tied = [v for sc, v in moves if sc == best_score]
            pick = tied[int(gen.integers(0, len(tied)))]
            mask1 ^= 1 << pick
    return NotFound(restarts)


@dataclass(frozen=True)
class Refinement:
    """Result of repeatedly splitting parts along beta-cuts.

    `modified_graph` has every used cut made exact; `edited_pairs` is the
    Hamming distance between the input's and the modified graph's edge sets.
    In exact mode every final part is certified beta-cut-free; in heuristic
    mode that is best-effort only.
    """

    parts: tuple[tuple[int, ...], ...]
    edited_pairs: int
    modified_graph: Graph
    certified: bool


def refine_along_cuts(g: Graph, beta, mode: str = "exact",
                      rng: Stream | None = None) -> Refinement:
    """Split parts along beta-cuts of their induced subgraphs until none has
    one, editing each used cut to an exact cut (erase crossing edges if
    sparse, complete them if dense)."""
    b = _validate_beta(beta)
    rows = list(g.rows)
    edited = 0
    final: list[tuple[int, ...]] = []
    work: list[tuple[int, ...]] = [tuple(range(g.n))]
    certified = mode == "exact" or b == 0
    counter = 0
    while work:
        part = work.pop()
        if len(part) < 2:
            final.append(part)
            continue
        sub = induced_subgraph(g, part)
        counter += 1
        res = find_beta_cut(sub, b, mode=mode,
                            rng=rng.child(counter) if rng is not None else None)
        if not res:
            final.append(part)
            continue
        side1 = tuple(part[i] for i in res.side1)
        side2 = tuple(part[i] for i in res.side2)
        make_edge = res.kind == "dense"
        for u in side1:
            for v in side2:
                has = bool((rows[u] >> v) & 1)
                if has != make_edge:
                    rows[u] ^= 1 << v
                    rows[v] ^= 1 << u
                    edited += 1
        work.append(side1)
        work.append(side2)
    final.sort()
    return Refinement(tuple(final), edited, Graph(g.n, rows), certified)


@dataclass(frozen=True)
class AboveCap:
    """Edit distance exceeds the search cap (distance > cap)."""

    cap: int


def distance_to_property(g: Graph, recognizer: Callable[[Graph], RecognitionResult],
                         cap: int = DISTANCE_CAP_BOUND) -> Union[int, AboveCap]:
    """Minimum number of pair toggles to reach the property, or AboveCap.

    Iterative deepening on the toggle budget. Branching is witness-driven:
    any edit set reaching a hereditary property must toggle some pair inside
    the recognizer's forbidden-structure witness, so only those pairs are
    tried, each pair at most once along a chain. Failures memoize the best
    budget known insufficient for a graph.
    """
    if g.n > DISTANCE_N_BOUND:
        raise ValueError(f"edit-distance oracle limited to n <= {DISTANCE_N_BOUND}")
    if cap > DISTANCE_CAP_BOUND:
        raise ValueError(f"edit-distance cap limited to {DISTANCE_CAP_BOUND}")
    failed_at: dict[tuple[int, ...], int] = {}

    def search(h: Graph, budget: int, banned: frozenset) -> bool:
        if failed_at.get(h.rows, -1) >= budget:
            return False
        res = recognizer(h)
        if res.member:
            return True
        if budget == 0:
            failed_at[h.rows] = max(failed_at.get(h.rows, -1), 0)
            return False
        witness = res.witness
        assert witness is not None, "distance search needs witness-producing recognizers"
        for i, u in enumerate(witness):
            for v in witness[i + 1:]:
                pair = (u, v) if u < v else (v, u)
                if pair in banned:
                    continue
                if search(h.with_toggled([pair]), budget - 1, banned | {pair}):
                    return True
        failed_at[h.rows] = max(failed_at.get(h.rows, -1), budget)
        return False

    for k in range(cap + 1):
        if search(g, k, frozenset()):
            return k
    return AboveCap(cap)
