from fractions import Fraction
from itertools import combinations

import pytest

from ptlab.graphs import (
    PartLabeling,
    complete_graph,
    count_triangles,
    cycle_graph,
    gnp,
    induced_subgraph,
    is_cycle_5,
)
from ptlab.packing import (
    PackingError,
    WitnessPacking,
    farness_lower_bound,
    greedy_c5_packing,
    random_tripartite_extract,
    triangle_cover,
    triangle_packing,
    triangles_of,
    tripartition_retention_samples,
)
from ptlab.rng import Stream


def naive_tau(g):
    tris = triangles_of(g)
    for r in range(len(tris), 0, -1):
        for combo in combinations(tris, r):
            edges = [frozenset(p) for t in combo
                     for p in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2]))]
            if len(edges) == len(set(edges)):
                return r
    return 0


def naive_nu(g):
    tris = triangles_of(g)
    if not tris:
        return 0
    edges = list(g.edges())
    for r in range(len(edges) + 1):
        for combo in combinations(edges, r):
            chosen = set(combo)
            if all(any(tuple(sorted(p)) in chosen
                       for p in ((a, b), (b, c), (a, c))) for a, b, c in tris):
                return r
    raise AssertionError


def test_packing_examples():
    assert len(triangle_packing(complete_graph(3))) == 1
    assert len(triangle_packing(complete_graph(4))) == 1  # any two triangles share an edge
    assert len(triangle_packing(cycle_graph(5))) == 0


def test_cover_examples():
    assert len(triangle_cover(complete_graph(3))) == 1
    cov = triangle_cover(complete_graph(4))
    assert len(cov) == 2
    assert count_triangles(complete_graph(4).with_toggled(cov)) == 0
    assert triangle_cover(cycle_graph(5)) == ()


def test_exact_tau_nu_match_naive():
    rng = Stream(3)
    for i in range(25):
        g = gnp(7, 0.5, rng.child(i))
        tau = len(triangle_packing(g))
        nu = len(triangle_cover(g))
        assert tau == naive_tau(g), i
        assert nu == naive_nu(g), i
        assert tau <= nu <= 3 * tau
        fp = triangle_cover(g, "from_packing")
        assert len(fp) <= 3 * tau
        assert count_triangles(g.with_toggled(fp)) == 0


def test_greedy_never_beats_exact_and_is_maximal():
    rng = Stream(5)
    for i in range(20):
        g = gnp(9, 0.5, rng.child(i))
        exact = triangle_packing(g)
        greedy = triangle_packing(g, "greedy")
        shuffled = triangle_packing(g, "greedy", rng.child(100, i))
        assert len(greedy) <= len(exact)
        assert len(shuffled) <= len(exact)
        used = {frozenset(p) for t in greedy.tuples
                for p in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2]))}
        for tri in triangles_of(g):
            tri_edges = {frozenset(p) for p in
                         ((tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2]))}
            assert tri_edges & used, "greedy packing not maximal"


def test_exact_guards():
    with pytest.raises(ValueError):
        triangle_packing(complete_graph(15))


def test_packing_verification_catches_lies():
    g = cycle_graph(5)
    with pytest.raises(PackingError):
        WitnessPacking("triangle", ((0, 1, 2),), 5).verified_in(g)
    k6 = complete_graph(6)
    with pytest.raises(PackingError):
        # two triangles sharing an edge
        WitnessPacking("triangle", ((0, 1, 2), (0, 1, 3)), 6).verified_in(k6)
    with pytest.raises(PackingError):
        WitnessPacking("inducedC5", ((0, 1, 2, 3, 4),), 6).verified_in(k6)


def test_farness_lower_bound():
    pk = triangle_packing(complete_graph(4))
    assert farness_lower_bound(pk, 4) == Fraction(1, 16)
    unverified = WitnessPacking("triangle", ((0, 1, 2),), 4)
    with pytest.raises(PackingError):
        farness_lower_bound(unverified, 4)
    empty = WitnessPacking("triangle", (), 4).verified_in(complete_graph(4))
    assert farness_lower_bound(empty, 4) == 0


def test_greedy_c5_packing_single_triangle():
    from ptlab.gadgets import build_c5_gadget
    lab = PartLabeling(3, [("V2", [0]), ("V3", [1]), ("V5", [2])])
    gb = build_c5_gadget(complete_graph(3), lab)
    cert = gb.certificate
    assert len(cert) == 1
    tup = cert.tuples[0]
    assert is_cycle_5(induced_subgraph(gb.graph, tup))
    assert 12 in tup and 13 in tup and 14 in tup


def test_greedy_c5_packing_from_planted():
    from ptlab.gadgets import ap3_free_set, rs_graph, build_c5_gadget
    for k in (2, 4, 6):
        rb = rs_graph(k, ap3_free_set(k, "exact"))
        gb = build_c5_gadget(rb.graph, rb.labeling.relabel(("V2", "V3", "V5")),
                             rb.certificate)
        cert = gb.certificate
        assert len(cert) == len(rb.certificate)
        vsets = [set(t) for t in cert.tuples]
        for i in range(len(vsets)):
            for j in range(i + 1, len(vsets)):
                assert len(vsets[i] & vsets[j]) <= 1


def test_greedy_c5_packing_empty():
    from ptlab.gadgets import build_c5_gadget
    lab = PartLabeling(3, [("V2", [0]), ("V3", [1]), ("V5", [2])])
    gb = build_c5_gadget(cycle_graph(3).with_toggled([(0, 1), (1, 2), (0, 2)]), lab)
    assert len(gb.certificate) == 0 and gb.farness == 0


def test_tripartite_extract_forced_alignment():
    g = complete_graph(3)
    packing = triangle_packing(g)
    lab = PartLabeling(3, [("X", [0]), ("Y", [1]), ("Z", [2])])
    f, labeling, kept = random_tripartite_extract(g, packing, Stream(1), parts=lab)
    assert len(kept) == 1 and f.m == 3
    assert labeling.part("X") == (0,)


def test_tripartite_extract_random_draws():
    rng = Stream(7)
    g = complete_graph(6)
    packing = triangle_packing(g)
    f, labeling, kept = random_tripartite_extract(g, packing, rng.child(0), retries=30)
    kept.verified_in(f)
    for name in ("X", "Y", "Z"):
        mask = labeling.part_mask(name)
        for v in range(6):
            if (mask >> v) & 1:
                assert not f.rows[v] & mask  # parts independent


def test_tripartite_extract_empty_packing():
    g = cycle_graph(5)
    packing = triangle_packing(g)  # empty
    f, labeling, kept = random_tripartite_extract(g, packing, Stream(2))
    assert len(kept) == 0


def test_retention_mean_near_two_ninths():
    import math
    g = complete_graph(3)
    packing = triangle_packing(g)
    samples = tripartition_retention_samples(g, packing, 30_000, Stream(11, (4,)))
    mean = sum(samples) / len(samples)
    se = math.sqrt((2 / 9) * (7 / 9) / len(samples))
    assert abs(mean - 2 / 9) <= 3 * se


def test_distance_dominates_tau():
    from ptlab.decomposition import AboveCap, distance_to_property
    from ptlab.recognizers import is_triangle_free
    rng = Stream(13)
    for i in range(40):
        g = gnp(7, 0.4, rng.child(i))
        tau = len(triangle_packing(g))
        d = distance_to_property(g, is_triangle_free)
        if isinstance(d, AboveCap):
            assert tau >= 0
        else:
            assert d >= tau


def test_packing_json_roundtrip():
    g = complete_graph(4)
    p = triangle_packing(g)
    data = p.to_json()
    assert data["kind"] == "triangle" and data["verified"]
    q = WitnessPacking.from_json(data)
    assert q.tuples == p.tuples and q.host_n == 4
