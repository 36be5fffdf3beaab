from fractions import Fraction

import pytest

from ptlab.decomposition import distance_to_property, find_beta_cut
from ptlab.extremal import ExtremalRecord, estimate_f, search_min_p3_density
from ptlab.graphs import count_induced_p3, cycle_graph
from ptlab.recognizers import is_cograph
from ptlab.rng import Stream


def test_search_small_beta_zero():
    rec = search_min_p3_density(4, 0, 30, Stream(1, (0,)))
    # the 4-path (or its complement) is the unique cut-free shape at n=4
    assert rec.p3_count == 1 and rec.p3_density == Fraction(1, 256)
    assert rec.certified


def test_search_n5_finds_exhaustive_optimum():
    rec = search_min_p3_density(5, Fraction(1, 5), 60, Stream(1, (1,)))
    # exhaustively-verified optimum: the bull graph, one induced 4-path
    assert rec.p3_density == Fraction(1, 625)
    assert find_beta_cut(rec.graph, Fraction(1, 5)) is None


def test_c5_record_reports_its_density():
    c5 = cycle_graph(5)
    assert find_beta_cut(c5, Fraction(1, 5)) is None  # C5 qualifies
    rec = ExtremalRecord(n=5, graph=c5, p3_count=count_induced_p3(c5),
                         p3_density=Fraction(5, 625), certified=True,
                         beta=Fraction(1, 5))
    assert float(rec.p3_density) == 0.008
    assert rec.p3_density >= rec.density_floor()


def test_record_validation():
    c5 = cycle_graph(5)
    with pytest.raises(ValueError):
        ExtremalRecord(n=5, graph=c5, p3_count=5, p3_density=Fraction(1, 2),
                       certified=True, beta=Fraction(1, 5))


def test_estimate_f_certifies_farness():
    rec = estimate_f(8, Fraction(2, 64), 15, Stream(2, (0,)))
    assert rec.epsilon == Fraction(2, 64)
    d = distance_to_property(rec.graph, is_cograph)
    assert d >= 2
    assert rec.p3_count > 0
    assert rec.p3_density >= rec.density_floor()


def test_estimate_f_epsilon_zero_reaches_cograph():
    rec = estimate_f(6, 0, 5, Stream(2, (1,)))
    assert rec.p3_count == 0
    assert is_cograph(rec.graph).member


def test_estimate_f_refuses_uncertifiable_threshold():
    with pytest.raises(ValueError):
        estimate_f(10, Fraction(1, 10), 5, Stream(3))  # threshold 10 > cap+1


def test_guards():
    with pytest.raises(ValueError):
        search_min_p3_density(23, 0.1, 5, Stream(4))
    with pytest.raises(ValueError):
        estimate_f(11, 0.01, 5, Stream(4))


def test_reproducibility():
    a = search_min_p3_density(6, Fraction(1, 5), 10, Stream(9, (7,)))
    b = search_min_p3_density(6, Fraction(1, 5), 10, Stream(9, (7,)))
    assert a.graph == b.graph and a.p3_count == b.p3_count


def test_json_payload():
    rec = search_min_p3_density(5, Fraction(1, 5), 10, Stream(11))
    data = rec.to_json()
    assert data["n"] == 5 and data["certified"]
    assert data["p3_density"] >= data["density_floor"]
