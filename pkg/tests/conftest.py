import random
from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from minbricks.enumerate import generate_minimal_bricks
from minbricks.graph import Graph, graph_from_edges


@st.composite
def graphs(draw, min_n=1, max_n=8, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(n, [e for e, keep in zip(pairs, picks) if keep])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return graph_from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def brute_perfect_matching(n: int, edges: set, vertices) -> bool:
    vs = sorted(vertices)
    if not vs:
        return True
    if len(vs) % 2:
        return False
    u = vs[0]
    return any(
        (min(u, w), max(u, w)) in edges and brute_perfect_matching(n, edges, [x for x in vs if x not in (u, w)])
        for w in vs[1:]
    )


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    he = set(h.edges())
    for p in permutations(range(g.n)):
        if all(tuple(sorted((p[u], p[v]))) in he for u, v in g.edges()):
            return True
    return False


@pytest.fixture(scope="session")
def catalog8():
    return generate_minimal_bricks(8)


@pytest.fixture(scope="session")
def catalog10():
    return generate_minimal_bricks(10)


@pytest.fixture(scope="session")
def catalog12():
    return generate_minimal_bricks(12)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
