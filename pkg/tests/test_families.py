import pytest

from minbricks.families import (FAMILIES, FamilyError, extremal_gn, family, k4, lower_biwheel,
                                lower_prismoid, moebius_ladder, petersen, planar_ladder, prism,
                                prism_as_complement, staircase, unavoidable_minors, upper_biwheel,
                                upper_prismoid, wheel)
from minbricks.graph import cubic_vertex_count
from minbricks.predicates import has_perfect_matching, is_bicritical, is_brick, is_minimal_brick


def _is_bipartite(g):
    colour = {}
    for s in range(g.n):
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def _girth(g):
    best = None
    for s in range(g.n):
        dist, parent, queue = {s: 0}, {s: -1}, [s]
        for v in queue:
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w], parent[w] = dist[v] + 1, v
                    queue.append(w)
                elif parent[v] != w:
                    cyc = dist[v] + dist[w] + 1
                    best = cyc if best is None else min(best, cyc)
    return best


def test_prism_three_ways():
    keys = {prism().canonical_key(), planar_ladder(3).canonical_key(),
            prism_as_complement().canonical_key()}
    assert len(keys) == 1
    assert (prism().n, prism().m) == (6, 9)


@pytest.mark.parametrize("g, n, m", [
    (staircase(5), 8, 12),
    (moebius_ladder(4), 8, 12),
    (lower_biwheel(3), 8, 12),
    (petersen(), 10, 15),
    (wheel(6), 6, 10),
    (wheel(8), 8, 14),
    (k4(), 4, 6),
])
def test_sizes(g, n, m):
    assert (g.n, g.m) == (n, m)


def test_staircase_on_eight_vertices_is_cubic():
    assert cubic_vertex_count(staircase(5)) == 8


def test_petersen():
    g = petersen()
    assert cubic_vertex_count(g) == 10
    assert _girth(g) == 5
    assert is_minimal_brick(g)


@pytest.mark.parametrize("t", [3, 4, 5])
def test_biwheels_bipartite_not_bricks(t):
    for g in (lower_biwheel(t), upper_biwheel(t)):
        assert _is_bipartite(g)
        assert not is_brick(g)
    assert _is_bipartite(upper_biwheel(2)) and not is_brick(upper_biwheel(2))


@pytest.mark.parametrize("t", range(2, 11))
def test_upper_prismoids(t):
    g = upper_prismoid(t)
    # odd t gives odd order, which no brick has
    assert is_brick(g) == (g.n % 2 == 0)


@pytest.mark.parametrize("t", [4, 6, 8])
def test_lower_prismoids_are_bricks(t):
    assert is_brick(lower_prismoid(t))


def test_unavoidable_minors_are_bricks():
    graphs = unavoidable_minors()
    assert len(graphs) == 7
    assert sorted(g.n for g in graphs.values()) == [6, 6, 8, 8, 8, 10, 10]
    assert all(is_brick(g) for g in graphs.values())


@pytest.mark.parametrize("n", range(2, 7))
def test_extremal_family(n):
    g = extremal_gn(n)
    assert (g.n, g.m) == (2 * n + 4, 5 * n + 3)
    # x and z have degree n + 1, so they are cubic too when n = 2
    assert cubic_vertex_count(g) == 2 * n + 1 + (2 if n == 2 else 0)
    assert g.m == 5 * (n + 2) - 7


@pytest.mark.parametrize("kind, param", [
    ("planar_ladder", 2), ("moebius_ladder", 1), ("staircase", 2), ("wheel", 3),
    ("lower_biwheel", 2), ("upper_biwheel", 1), ("lower_prismoid", 3), ("upper_prismoid", 1),
    ("extremal_gn", 1), ("nonsense", 3),
])
def test_parameter_ranges(kind, param):
    with pytest.raises(FamilyError):
        family(kind, param)


def test_family_dispatch_covers_every_kind():
    for kind in FAMILIES:
        assert family(kind, 4 if kind != "extremal_gn" else 2).n >= 4


def test_wheels_have_odd_rim_for_bricks():
    assert is_bicritical(wheel(6))
    assert not has_perfect_matching(wheel(5))
