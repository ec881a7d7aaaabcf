import random

import pytest
from hypothesis import given, settings, strategies as st

from minbricks.families import (cycle, extremal_gn, k4, lower_prismoid, moebius_ladder, petersen,
                                planar_ladder, prism, prism_plus_edge, staircase, unavoidable_minors,
                                wheel)
from minbricks.graph import graph_from_edges
from minbricks.minor import (MinorBudgetExceeded, MinorQuery, central_subgraphs, central_vertex_sets,
                             is_matching_minor, matching_minor_naive, reduce_by_bicontraction)
from minbricks.transforms import bisubdivide

from conftest import graphs


def test_central_subgraphs_of_c4():
    c4 = cycle(4)
    sets = set(central_vertex_sets(c4, 2))
    assert 0b1111 in sets
    assert 0b0011 in sets          # complement {2, 3} is an edge
    assert 0b0101 not in sets      # complement {1, 3} has no edge
    assert c4 in set(central_subgraphs(c4, 4))


def test_reduce_examples():
    sub, _, _ = bisubdivide(k4(), 0, 1)
    assert reduce_by_bicontraction(sub) == {k4().canonical_key()}
    assert reduce_by_bicontraction(prism()) == {prism().canonical_key()}
    assert reduce_by_bicontraction(cycle(6)) == {graph_from_edges(2, [(0, 1)]).canonical_key()}


@pytest.mark.parametrize("g", [k4(), prism(), petersen(), wheel(6), moebius_ladder(4)])
def test_reflexive(g):
    assert is_matching_minor(g, g)


def test_fixed_answers():
    sub, _, _ = bisubdivide(k4(), 0, 1)
    assert is_matching_minor(k4(), sub)
    assert not is_matching_minor(prism(), k4())
    assert not is_matching_minor(k4(), prism())
    assert is_matching_minor(k4(), petersen())


def test_budget_refusal():
    with pytest.raises(MinorBudgetExceeded):
        is_matching_minor(MinorQuery(k4(), extremal_gn(5), max_host_vertices=12))
    assert is_matching_minor(MinorQuery(k4(), extremal_gn(5), max_host_vertices=14))


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=2, max_n=6), graphs(min_n=2, max_n=4))
def test_agrees_with_naive_search(host, pattern):
    if host.m > 11:
        return
    assert is_matching_minor(pattern, host) == matching_minor_naive(pattern, host)


@pytest.mark.parametrize("host", [prism(), wheel(6), prism_plus_edge(), cycle(6)],
                         ids=["prism", "wheel6", "prism+edge", "c6"])
@pytest.mark.parametrize("pattern", [k4(), cycle(4), graph_from_edges(4, [(0, 1), (2, 3)]),
                                     graph_from_edges(2, [(0, 1)])],
                         ids=["k4", "c4", "2k2", "k2"])
def test_agrees_with_naive_on_families(host, pattern):
    assert is_matching_minor(pattern, host) == matching_minor_naive(pattern, host)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=8), graphs(min_n=1, max_n=8))
def test_size_monotone(host, pattern):
    if is_matching_minor(pattern, host):
        assert pattern.n <= host.n and (host.n - pattern.n) % 2 == 0


POOL = [k4(), prism(), wheel(6), prism_plus_edge(), wheel(8), moebius_ladder(4), staircase(5),
        lower_prismoid(6), extremal_gn(2), planar_ladder(4), petersen(), staircase(6),
        planar_ladder(5), extremal_gn(3)]


def test_transitivity_on_family_triples():
    rng = random.Random(7)
    checked = 0
    while checked < 50:
        a, b, c = sorted(rng.sample(POOL, 3), key=lambda g: g.n)
        if is_matching_minor(a, b) and is_matching_minor(b, c):
            assert is_matching_minor(a, c)
        checked += 1


def test_ten_vertex_staircase_has_a_listed_minor():
    host = staircase(6)
    assert any(is_matching_minor(p, host) for p in unavoidable_minors().values())


@pytest.mark.parametrize("g", [wheel(6), wheel(8), moebius_ladder(4), staircase(5), petersen(),
                               lower_prismoid(6), planar_ladder(5), extremal_gn(3)])
def test_family_bricks_have_k4_or_prism(g):
    assert is_matching_minor(k4(), g) or is_matching_minor(prism(), g)
