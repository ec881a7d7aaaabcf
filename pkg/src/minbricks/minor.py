"""Central subgraphs and the matching-minor relation.

``is_matching_minor`` does not enumerate edge subsets.  Deleting an edge
commutes with bicontracting a vertex it does not touch (after the
contraction the edge is either still present, or has merged with a parallel
edge or become a loop and is dropped anyway).  So any derivation can be
rewritten so that, just before each bicontraction of ``v0``, only edges at
``v0`` are deleted, and every other deletion happens at the very end.  The
search therefore starts from induced central subgraphs, repeatedly keeps two
edges at some vertex and bicontracts it, and finally asks whether the
pattern is a spanning subgraph of a state with the right order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .graph import Graph, _bits, _from_rows, induced_subgraph, popcount
from .predicates import has_perfect_matching
from .transforms import bicontract

DEFAULT_BUDGET = 12


class MinorBudgetExceeded(ValueError):
    """The host is larger than the search budget; no answer is given."""


@dataclass(frozen=True)
class MinorQuery:
    pattern: Graph
    host: Graph
    max_host_vertices: int = DEFAULT_BUDGET


def central_vertex_sets(g: Graph, min_vertices: int = 0) -> Iterator[int]:
    """Bitmasks ``S`` with ``|S| >= min_vertices`` such that ``g - S`` has a perfect matching."""
    full = (1 << g.n) - 1
    for size in range(g.n, min_vertices - 1, -1):
        if (g.n - size) % 2:
            continue
        for keep in combinations(range(g.n), size):
            mask = 0
            for v in keep:
                mask |= 1 << v
            if has_perfect_matching(g, mask):
                yield mask
        if size == 0:
            break


def central_subgraphs(g: Graph, min_vertices: int = 0) -> Iterator[Graph]:
    """Every central subgraph with at least ``min_vertices`` vertices.

    A subgraph is given by a central vertex set together with any subset of the
    edges it induces; vertices are relabelled in their original order.  The
    stream is exponential in the number of induced edges.
    """
    for mask in central_vertex_sets(g, min_vertices):
        base = induced_subgraph(g, mask)
        edges = base.edges()
        for sub in range(1 << len(edges)):
            rows = [0] * base.n
            for i, (u, v) in enumerate(edges):
                if sub >> i & 1:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
            yield _from_rows(rows)


def _bicontraction_steps(g: Graph) -> Iterator[Graph]:
    for v in range(g.n):
        if popcount(g.adj[v]) == 2:
            yield bicontract(g, v)


def reduce_by_bicontraction(j: Graph) -> set[bytes]:
    """Keys of the graphs without degree-2 vertices reachable by bicontractions.

    All reduction orders are explored, memoised on canonical keys.
    """
    seen: set[bytes] = set()
    terminal: set[bytes] = set()
    stack = [j]
    while stack:
        g = stack.pop()
        key = g.canonical_key()
        if key in seen:
            continue
        seen.add(key)
        nxt = list(_bicontraction_steps(g))
        if not nxt:
            terminal.add(key)
        stack.extend(nxt)
    return terminal


def bicontraction_closure(j: Graph) -> set[bytes]:
    """Keys of every graph reachable from ``j`` by bicontractions, ``j`` included."""
    seen: set[bytes] = set()
    stack = [j]
    while stack:
        g = stack.pop()
        key = g.canonical_key()
        if key not in seen:
            seen.add(key)
            stack.extend(_bicontraction_steps(g))
    return seen


def _spanning_monomorphism(pattern: Graph, host: Graph) -> bool:
    """Whether ``pattern`` is isomorphic to a spanning subgraph of ``host`` (same order)."""
    n = pattern.n
    if n != host.n or pattern.m > host.m:
        return False
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    if any(a > b for a, b in zip(sorted(pdeg, reverse=True), sorted(hdeg, reverse=True))):
        return False
    # place pattern vertices in BFS order from the highest-degree vertex
    order: list[int] = []
    placed = 0
    while len(order) < n:
        rest = [v for v in range(n) if not placed >> v & 1]
        frontier = [v for v in rest if pattern.adj[v] & placed] or rest
        v = max(frontier, key=lambda x: (popcount(pattern.adj[x] & placed), pdeg[x], -x))
        order.append(v)
        placed |= 1 << v
    image = [-1] * n
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        need = [image[w] for w in _bits(pattern.adj[v]) if image[w] >= 0]
        cand = ((1 << n) - 1) & ~used
        for w in need:
            cand &= host.adj[w]
        for c in _bits(cand):
            if hdeg[c] < pdeg[v]:
                continue
            image[v] = c
            used |= 1 << c
            if place(i + 1):
                return True
            used &= ~(1 << c)
            image[v] = -1
        return False

    return place(0)


def _keep_two_and_bicontract(g: Graph) -> Iterator[Graph]:
    for v in range(g.n):
        nbrs = list(_bits(g.adj[v]))
        if len(nbrs) < 2:
            continue
        for a, b in combinations(nbrs, 2):
            keep = (1 << a) | (1 << b)
            if len(nbrs) == 2:
                yield bicontract(g, v)
                continue
            rows = list(g.adj)
            for w in nbrs:
                if not keep >> w & 1:
                    rows[w] &= ~(1 << v)
            rows[v] = keep
            yield bicontract(_from_rows(rows), v)


def is_matching_minor(query: MinorQuery | Graph, host: Optional[Graph] = None,
                      max_host_vertices: int = DEFAULT_BUDGET) -> bool:
    """Exact decision of whether ``pattern`` is isomorphic to a matching minor of ``host``.

    Raises ``MinorBudgetExceeded`` when the host has more vertices than the budget.
    """
    if isinstance(query, MinorQuery):
        pattern, host, budget = query.pattern, query.host, query.max_host_vertices
    else:
        assert host is not None
        pattern, budget = query, max_host_vertices
    if host.n > budget:
        raise MinorBudgetExceeded(f"host has {host.n} vertices, budget is {budget}")
    h, hm = pattern.n, pattern.m
    if h > host.n or (host.n - h) % 2:
        return False
    no_isolated = pattern.n == 0 or pattern.min_degree() >= 1
    target = pattern.canonical_key()
    seen: set[bytes] = set()

    def viable(g: Graph) -> bool:
        if g.m - (g.n - h) < hm:
            return False
        if no_isolated and any(row == 0 for row in g.adj):
            return False
        return True

    for mask in central_vertex_sets(host, h):
        if (popcount(mask) - h) % 2:
            continue
        stack = [induced_subgraph(host, mask)]
        while stack:
            g = stack.pop()
            if not viable(g):
                continue
            key = g.canonical_key()
            if key in seen:
                continue
            seen.add(key)
            if g.n == h:
                if key == target or _spanning_monomorphism(pattern, g):
                    return True
                continue
            stack.extend(_keep_two_and_bicontract(g))
    return False


def matching_minor_naive(pattern: Graph, host: Graph) -> bool:
    """Definition-level check: enumerate every central subgraph and every bicontraction order.

    Exponential in the edge count; intended as a test oracle for tiny hosts.
    """
    target = pattern.canonical_key()
    for j in central_subgraphs(host, pattern.n):
        if (j.n - pattern.n) % 2:
            continue
        if target in bicontraction_closure(j):
            return True
    return False
