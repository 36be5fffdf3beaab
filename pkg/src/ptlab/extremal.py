"""Randomized search for extremal graphs: few induced 4-paths subject to
having no beta-cut, or to being far from cograph-hood.

The searches produce empirical UPPER-bound candidates for the extremal
densities; every record is checked against the guarantee-level floor
((beta/100)^12 resp. (epsilon/100)^16), whose violation would falsify the
implementation, not the guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .decomposition import AboveCap, DISTANCE_CAP_BOUND, distance_to_property, find_beta_cut
from .graphs import Graph, count_induced_p3, gnp, pair_count, pair_from_index
from .recognizers import is_cograph
from .rng import Stream

__all__ = [
    "ExtremalRecord",
    "search_min_p3_density",
    "estimate_f",
    "SEARCH_CERTIFIED_BOUND",
    "FARNESS_N_BOUND",
]

SEARCH_CERTIFIED_BOUND = 22
FARNESS_N_BOUND = 10


@dataclass(frozen=True)
class ExtremalRecord:
    """Best graph found, its induced-4-path density, and how it qualifies."""

    n: int
    graph: Graph
    p3_count: int
    p3_density: Fraction
    certified: bool
    beta: Optional[Fraction] = None
    epsilon: Optional[Fraction] = None
    provenance: dict | None = None

    def __post_init__(self):
        expect = Fraction(self.p3_count, self.n ** 4)
        if self.p3_density != expect:
            raise ValueError(f"density {self.p3_density} != count/n^4 = {expect}")
        floor = self.density_floor()
        if self.p3_density < floor:
            raise AssertionError(
                f"record density {self.p3_density} below guaranteed floor {floor}; "
                "the search or the counters are broken")

    def density_floor(self) -> Fraction:
        """Guarantee-level lower bound on the density for this family."""
        if self.beta is not None:
            return (self.beta / 100) ** 12
        assert self.epsilon is not None
        return (self.epsilon / 100) ** 16

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "beta": None if self.beta is None else str(self.beta),
            "epsilon": None if self.epsilon is None else str(self.epsilon),
            "p3_count": self.p3_count,
            "p3_density": float(self.p3_density),
            "density_floor": float(self.density_floor()),
            "certified": self.certified,
            "provenance": self.provenance,
        }


def _hill_climb(n: int, qualifies: Callable[[Graph], bool], effort: int,
                rng: Stream, start_p: float = 0.5):
    """Best (count, graph) over `effort` restarts of first-improvement
    hill-climbing on single-pair toggles, staying inside `qualifies`.

    Equal-count moves are accepted with probability 1/2 to drift across
    plateaus; ties in the final reduction go to the lexicographically least
    adjacency encoding, so the result is restart-order independent.
    """
    total_pairs = pair_count(n)
    best: tuple[int, tuple, Graph] | None = None
    for restart in range(effort):
        child = rng.child(restart)
        gen = child.gen
        g = None
        for attempt in range(40):
            cand = gnp(n, start_p, child.child(attempt))
            if qualifies(cand):
                g = cand
                break
        if g is None:
            continue
        count = count_induced_p3(g)
        for _ in range(4 * total_pairs):
            order = gen.permutation(total_pairs)
            moved = False
            for idx in order:
                pair = pair_from_index(n, int(idx))
                cand = g.with_toggled([pair])
                if not qualifies(cand):
                    continue
                c2 = count_induced_p3(cand)
                if c2 < count or (c2 == count and int(gen.integers(0, 2)) == 0):
                    g, count = cand, c2
                    moved = True
                    break
            if not moved:
                break
        key = (count, g.key())
        if best is None or key < (best[0], best[1]):
            best = (count, g.key(), g)
    if best is None:
        raise ValueError(
            f"no qualifying graph found in {effort} restarts at n={n}")
    return best[0], best[2]


def search_min_p3_density(n: int, beta, effort: int, rng: Stream) -> ExtremalRecord:
    """Hill-climb for a graph with no beta-cut and few induced 4-paths.

    The no-cut constraint is re-checked exactly at every accepted step
    (certified for n <= 22, where exact enumeration is allowed).
    """
    if n > SEARCH_CERTIFIED_BOUND:
        raise ValueError(f"certified search limited to n <= {SEARCH_CERTIFIED_BOUND}")
    b = Fraction(beta)

    def qualifies(g: Graph) -> bool:
        return find_beta_cut(g, b, mode="exact") is None

    count, g = _hill_climb(n, qualifies, effort, rng)
    return ExtremalRecord(
        n=n, graph=g, p3_count=count, p3_density=Fraction(count, n ** 4),
        certified=True, beta=b,
        provenance={"seed": rng.seed, "path": list(rng.path), "effort": effort})


def estimate_f(n: int, epsilon, effort: int, rng: Stream) -> ExtremalRecord:
    """Hill-climb for a graph far from cograph-hood with few induced 4-paths.

    Farness is certified by the exact edit-distance oracle: a graph
    qualifies when its distance to the nearest cograph is at least
    epsilon * n^2. Thresholds beyond the oracle's cap cannot be certified
    and are refused.
    """
    if n > FARNESS_N_BOUND:
        raise ValueError(f"certified farness limited to n <= {FARNESS_N_BOUND}")
    eps = Fraction(epsilon)
    if eps < 0:
        raise ValueError("epsilon must be >= 0")
    threshold = eps * n * n
    if threshold > DISTANCE_CAP_BOUND + 1:
        raise ValueError(
            f"farness threshold {threshold} exceeds what the distance oracle "
            f"(cap {DISTANCE_CAP_BOUND}) can certify")

    def qualifies(g: Graph) -> bool:
        d = distance_to_property(g, is_cograph)
        if isinstance(d, AboveCap):
            return Fraction(d.cap + 1) >= threshold
        return Fraction(d) >= threshold

    count, g = _hill_climb(n, qualifies, effort, rng)
    return ExtremalRecord(
        n=n, graph=g, p3_count=count, p3_density=Fraction(count, n ** 4),
        certified=True, epsilon=eps,
        provenance={"seed": rng.seed, "path": list(rng.path), "effort": effort})
