from fractions import Fraction

import pytest

from ptlab.decomposition import AboveCap, distance_to_property
from ptlab.gadgets import (
    ApFreeSet,
    ap3_free_set,
    build_c5_gadget,
    build_poset_gadget,
    rs_graph,
)
from ptlab.graphs import (
    PartLabeling,
    complete_graph,
    count_induced_c5,
    count_triangles,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    is_cycle_5,
    naive_induced_count,
    sample_vertices,
)
from ptlab.recognizers import (
    check_order_transitivity,
    is_comparability,
    is_poset,
    is_triangle_free,
)
from ptlab.rng import Stream


def exhaustive_max_ap_free(n):
    best = 0
    for mask in range(1 << n):
        elems = [i + 1 for i in range(n) if (mask >> i) & 1]
        present = set(elems)
        ok = True
        for i, a in enumerate(elems):
            for b in elems[i + 1:]:
                if 2 * b - a in present:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            best = max(best, len(elems))
    return best


def test_ap_free_examples():
    assert len(ap3_free_set(9, "exact")) == 5
    assert ap3_free_set(2, "exact").elements == (1, 2)
    assert ap3_free_set(1, "exact").elements == (1,)
    with pytest.raises(ValueError):
        ap3_free_set(41, "exact")
    with pytest.raises(ValueError):
        ApFreeSet(9, (1, 2, 3))
    with pytest.raises(ValueError):
        ApFreeSet(3, (1, 5))


def test_ap_free_exact_matches_exhaustive():
    for n in range(1, 13):
        assert len(ap3_free_set(n, "exact")) == exhaustive_max_ap_free(n), n


def test_ap_free_behrend_verified_and_reasonable():
    for n in (10, 50, 300):
        s = ap3_free_set(n, "behrend")
        assert s.elements  # construction verified 3-AP-free by the type
        if n <= 12:
            assert len(s) <= exhaustive_max_ap_free(n)


def test_rs_graph_example():
    bundle = rs_graph(5, ApFreeSet(5, (1, 2, 4)))
    g = bundle.graph
    assert g.n == 30 and g.m == 45
    assert count_triangles(g) == 15
    assert naive_induced_count(g, lambda h: h.m == 3, 3) == 15
    assert len(bundle.certificate) == 15
    assert bundle.farness == Fraction(15, 900)


def test_rs_graph_small_and_rejects():
    assert count_triangles(rs_graph(1, ApFreeSet(1, (1,))).graph) == 1
    with pytest.raises(ValueError):
        rs_graph(5, ApFreeSet(5, (1, 2, 3)))
    with pytest.raises(ValueError):
        rs_graph(2, ApFreeSet(5, (1, 4)))  # elements exceed k


def test_rs_graph_exactness_sweep():
    for k in range(1, 11):
        s = ap3_free_set(k, "exact")
        bundle = rs_graph(k, s)  # constructor audits count == k|S|
        assert count_triangles(bundle.graph) == k * len(s)


def test_c5_gadget_single_triangle():
    lab = PartLabeling(3, [("V2", [0]), ("V3", [1]), ("V5", [2])])
    gb = build_c5_gadget(complete_graph(3), lab)
    g = gb.graph
    assert g.n == 15
    tup = gb.certificate.tuples[0]
    assert is_cycle_5(induced_subgraph(g, tup))
    # exact census: brute-force enumeration is the oracle; the construction
    # contributes one completion per (outer1, outer2) pair = 36
    assert count_induced_c5(g) == naive_induced_count(g, is_cycle_5, 5) == 36
    assert gb.farness == Fraction(1, 225)


def test_c5_gadget_farness_scaling():
    # t edge-disjoint triangles in the inner graph give farness t/(5n)^2
    rb = rs_graph(4, ap3_free_set(4, "exact"))
    gb = build_c5_gadget(rb.graph, rb.labeling.relabel(("V2", "V3", "V5")),
                         rb.certificate)
    t = len(rb.certificate)
    assert gb.farness == Fraction(t, (5 * rb.graph.n) ** 2)


def test_c5_gadget_triangle_free_inner():
    lab = PartLabeling(3, [("V2", [0]), ("V3", [1]), ("V5", [2])])
    gb = build_c5_gadget(empty_graph(3), lab)
    assert len(gb.certificate) == 0
    # no planted-shape copies: every induced C5 would need the inner triangle
    assert count_induced_c5(gb.graph) == naive_induced_count(gb.graph, is_cycle_5, 5)


def test_c5_gadget_rejects_bad_inner():
    lab = PartLabeling(3, [("V2", [0, 1]), ("V3", [2]), ("V5", [])],
                       allow_empty=True)
    bad = complete_graph(3)  # edge inside V2
    with pytest.raises(ValueError):
        build_c5_gadget(bad, lab)


def test_c5_gadget_sampling_mechanism():
    rb = rs_graph(4, ap3_free_set(4, "exact"))
    f = rb.graph
    gb = build_c5_gadget(f, rb.labeling.relabel(("V2", "V3", "V5")), rb.certificate)
    rng = Stream(83)
    inner_n = f.n
    seen_trifree = 0
    for i in range(200):
        pick = sample_vertices(gb.graph.n, 10, rng.child(i))
        fpart = [v - 4 * inner_n for v in pick if v >= 4 * inner_n]
        if count_triangles(induced_subgraph(f, fpart)) == 0:
            seen_trifree += 1
            sub = induced_subgraph(gb.graph, pick)
            assert check_order_transitivity(sub, gb.labeling.restrict(pick)).member
            assert is_comparability(sub).member
    assert seen_trifree > 0


def test_poset_gadget_examples():
    lab = PartLabeling(3, [("V1", [0]), ("V2", [1]), ("V3", [2])])
    gb = build_poset_gadget(complete_graph(3), lab)
    assert gb.graph.has_arc(0, 1) and gb.graph.has_arc(1, 2)
    assert not gb.graph.has_arc(0, 2)
    assert not is_poset(gb.graph).member
    # no inner edges at all: only the complement arcs V1->V3 remain
    gb2 = build_poset_gadget(empty_graph(3), lab)
    assert gb2.graph.has_arc(0, 2) and is_poset(gb2.graph).member


def test_poset_gadget_samples():
    rb = rs_graph(3, ap3_free_set(3, "exact"))
    t = rb.graph
    gb = build_poset_gadget(t, rb.labeling.relabel(("V1", "V2", "V3")), rb.certificate)
    rng = Stream(89)
    for i in range(300):
        pick = sample_vertices(t.n, 7, rng.child(i))
        tri_free = count_triangles(induced_subgraph(t, pick)) == 0
        assert is_poset(gb.graph.induced(pick)).member == tri_free


def test_bundle_farness_below_exact_distance():
    rb = rs_graph(1, ap3_free_set(1, "exact"))  # n = 6, farness 1/36
    d = distance_to_property(rb.graph, is_triangle_free)
    dist = d.cap + 1 if isinstance(d, AboveCap) else d
    assert rb.farness <= Fraction(dist, 36)
