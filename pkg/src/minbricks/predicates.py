"""Perfect matchings, 3-connectivity, bicriticality and the brick predicates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import Graph, _bits, delete_edge, is_connected


def _neighbour_lists(adj: tuple[int, ...], mask: int) -> dict[int, list[int]]:
    return {v: list(_bits(adj[v] & mask)) for v in _bits(mask)}


def _perfect_matching(nbrs: dict[int, list[int]], n: int) -> Optional[list[int]]:
    """A perfect matching of the graph given by ``nbrs`` (as a mate array), or ``None``."""
    verts = list(nbrs)
    if len(verts) % 2 or any(not nbrs[v] for v in verts):
        return None
    match = [-1] * n
    for v in verts:
        if match[v] == -1:
            for w in nbrs[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break
    for root in verts:
        if match[root] == -1 and _augmenting_path(nbrs, match, root, n) == -1:
            return None
    return match


def _has_perfect_matching_on(adj: tuple[int, ...], mask: int) -> bool:
    """Edmonds' blossom search restricted to the vertices in ``mask``."""
    if not mask:
        return True
    return _perfect_matching(_neighbour_lists(adj, mask), mask.bit_length()) is not None


def _unmatchable_partner(nbrs: dict[int, list[int]], match: list[int], u: int, n: int) -> int:
    """Smallest ``v`` such that the graph minus ``u`` and ``v`` has no perfect matching, or -1.

    ``match`` is a perfect matching.  Dropping ``u`` leaves its mate as the
    only exposed vertex; ``v`` can be removed as well exactly when the blossom
    search from that mate reaches ``v`` as an outer vertex.
    """
    mate = match[u]
    sub = {w: [x for x in ws if x != u] for w, ws in nbrs.items() if w != u}
    m2 = list(match)
    m2[u] = m2[mate] = -1
    outer = [False] * n
    _augmenting_path(sub, m2, mate, n, outer)
    for v in sorted(sub):
        if not outer[v]:
            return v
    return -1


def _augmenting_path(nbrs: dict[int, list[int]], match: list[int], root: int, n: int,
                     used: Optional[list[bool]] = None) -> int:
    """Grow an alternating tree from the exposed ``root``; augment and return the far end.

    Returns -1 if there is no augmenting path, in which case ``used`` (if
    given) marks the outer vertices of the final tree.
    """
    if used is None:
        used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in nbrs:
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    # flip the alternating path ending at ``to``
                    w = to
                    while w != -1:
                        pw = parent[w]
                        nxt = match[pw]
                        match[w], match[pw] = pw, w
                        w = nxt
                    return to
                used[match[to]] = True
                queue.append(match[to])
    return -1


def has_perfect_matching(g: Graph, removed: int = 0) -> bool:
    """Whether ``g`` minus the vertex bitmask ``removed`` has a perfect matching.

    The graph on zero vertices has the empty matching.
    """
    return _has_perfect_matching_on(g.adj, ((1 << g.n) - 1) & ~removed)


def find_separator(g: Graph) -> Optional[tuple[int, ...]]:
    """A vertex set of size at most two whose removal disconnects ``g``.

    Returns ``()`` when ``g`` itself is disconnected, ``None`` if no such set.
    """
    full = (1 << g.n) - 1
    if not is_connected(g):
        return ()
    for v in range(g.n):
        if g.n - 1 >= 2 and not is_connected(g, full & ~(1 << v)):
            return (v,)
    for u, v in combinations(range(g.n), 2):
        rest = full & ~(1 << u) & ~(1 << v)
        if rest and not is_connected(g, rest):
            return (u, v)
    return None


def is_three_connected(g: Graph) -> bool:
    return g.n >= 4 and g.min_degree() >= 3 and find_separator(g) is None


def _bicritical_failure_on(adj: tuple[int, ...], n: int) -> Optional[tuple[int, int]]:
    nbrs = _neighbour_lists(adj, (1 << n) - 1)
    match = _perfect_matching(nbrs, n)
    if match is None:
        # a graph with a pair whose removal leaves a perfect matching, plus an
        # edge between them, has one itself; fall back to the plain scan
        for u, v in combinations(range(n), 2):
            if not _has_perfect_matching_on(adj, ((1 << n) - 1) & ~(1 << u) & ~(1 << v)):
                return (u, v)
        return None
    for u in range(n):
        v = _unmatchable_partner(nbrs, match, u, n)
        if v != -1:
            return (min(u, v), max(u, v))
    return None


def bicritical_failure(g: Graph) -> Optional[tuple[int, int]]:
    """First pair ``(u, v)`` such that ``g - u - v`` has no perfect matching."""
    return _bicritical_failure_on(g.adj, g.n)


def is_bicritical(g: Graph) -> bool:
    if g.n < 2 or g.n % 2:
        return False
    return bicritical_failure(g) is None


def is_brick(g: Graph) -> bool:
    if g.n % 2 or g.n < 4:
        return False
    return is_three_connected(g) and is_bicritical(g)


def _three_disjoint_paths(adj: tuple[int, ...], n: int, s: int, t: int) -> bool:
    """Whether ``s`` and ``t`` (nonadjacent) are joined by three internally disjoint paths."""
    # unit vertex capacities: node 2v is v-in, 2v+1 is v-out
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(x: int, y: int) -> None:
        if (x, y) not in cap:
            out[x].append(y)
            out[y].append(x)
            cap.setdefault((y, x), 0)
        cap[(x, y)] = 1

    for v in range(n):
        arc(2 * v, 2 * v + 1)
        for w in _bits(adj[v]):
            arc(2 * v + 1, 2 * w)
    source, sink = 2 * s + 1, 2 * t
    for _ in range(3):
        prev = {source: -1}
        queue = deque([source])
        while queue and sink not in prev:
            x = queue.popleft()
            for y in out[x]:
                if y not in prev and cap[(x, y)] > 0:
                    prev[y] = x
                    queue.append(y)
        if sink not in prev:
            return False
        y = sink
        while prev[y] != -1:
            x = prev[y]
            cap[(x, y)] -= 1
            cap[(y, x)] += 1
            y = x
    return True


def removable_edge(g: Graph) -> Optional[tuple[int, int]]:
    """An edge whose deletion leaves a brick, assuming ``g`` is a brick.

    Deleting an edge at a degree-3 vertex leaves a degree-2 vertex, which
    cannot lie in a 3-connected graph, so only edges between vertices of
    degree at least four are tried.  Since ``g`` is 3-connected, any 2-cut of
    ``g - ab`` separates ``a`` from ``b``, so three disjoint ``a``-``b``
    paths decide 3-connectivity.
    """
    deg = g.degrees()
    for u, v in g.edges():
        if deg[u] < 4 or deg[v] < 4:
            continue
        h = delete_edge(g, (u, v))
        if _three_disjoint_paths(h.adj, h.n, u, v) and _bicritical_failure_on(h.adj, h.n) is None:
            return (u, v)
    return None


def is_minimal_brick(g: Graph) -> bool:
    return is_brick(g) and removable_edge(g) is None


@dataclass(frozen=True)
class BrickClassification:
    is_even_order: bool
    is_three_connected: bool
    is_bicritical: bool
    is_brick: bool
    is_minimal_brick: bool
    # (leg, vertices): ("odd-order", ()), ("separator", cut),
    # ("unmatchable-pair", (u, v)) or ("removable-edge", (u, v))
    witness: Optional[tuple[str, tuple[int, ...]]] = None

    def to_dict(self) -> dict:
        return {
            "even_order": self.is_even_order,
            "three_connected": self.is_three_connected,
            "bicritical": self.is_bicritical,
            "brick": self.is_brick,
            "minimal_brick": self.is_minimal_brick,
            "witness": None if self.witness is None
            else {"kind": self.witness[0], "vertices": list(self.witness[1])},
        }


def classify(g: Graph) -> BrickClassification:
    """Evaluate every leg of the brick definition and record the first failure."""
    witness = None
    even = g.n % 2 == 0 and g.n >= 2
    if not even:
        witness = ("odd-order", ())

    if g.n < 4:
        cut: Optional[tuple[int, ...]] = tuple(range(g.n))
    else:
        cut = find_separator(g)
    three = cut is None
    if not three and witness is None:
        witness = ("separator", cut or ())

    pair = bicritical_failure(g) if even else None
    bicrit = even and pair is None
    if not bicrit and witness is None and pair is not None:
        witness = ("unmatchable-pair", pair)

    brick = even and three and bicrit and g.n >= 4
    minimal = False
    if brick:
        e = removable_edge(g)
        minimal = e is None
        if e is not None:
            witness = ("removable-edge", e)
    return BrickClassification(even, three, bicrit, brick, minimal, witness)
