"""Immutable simple graphs on at most 31 vertices, canonical forms and graph6.

Adjacency is stored as one integer bitmask per vertex, so a neighbour set fits
in a machine word and set operations are single integer ops.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 31


class GraphError(ValueError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  Instances are values:
    every edit returns a fresh graph.
    """

    n: int
    adj: tuple[int, ...]
    _key: list = field(default_factory=list, compare=False, repr=False, hash=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise GraphError(f"bad adjacency row for vertex {v}")
            for w in _bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency at {v}-{w}")

    # -- basic queries -----------------------------------------------------

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def canonical_key(self) -> bytes:
        if not self._key:
            self._key.append(canonical_form(self))
        return self._key[0]

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={write_graph6(self)})"


def graph_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build the simple graph on ``n`` vertices with the given edges.

    Duplicate pairs collapse; self-loops and out-of-range endpoints raise.
    """
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _from_rows(rows: Sequence[int]) -> Graph:
    # internal constructor; rows are assumed valid
    g = object.__new__(Graph)
    object.__setattr__(g, "n", len(rows))
    object.__setattr__(g, "adj", tuple(rows))
    object.__setattr__(g, "_key", [])
    return g


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Return the graph whose vertex ``i`` is vertex ``order[i]`` of ``g``."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for w in _bits(g.adj[v]):
            row |= 1 << pos[w]
        rows.append(row)
    return _from_rows(rows)


# -- elementary edits ----------------------------------------------------------


def add_vertices(g: Graph, count: int) -> Graph:
    if g.n + count > MAX_VERTICES:
        raise GraphError(f"vertex budget {MAX_VERTICES} exceeded")
    return _from_rows(g.adj + (0,) * count)


def with_edge(g: Graph, u: int, v: int) -> Graph:
    """``g`` plus the edge ``uv``; unchanged if ``u == v`` or already adjacent."""
    if u == v or g.adj[u] >> v & 1:
        return g
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return _from_rows(rows)


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not in graph")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return _from_rows(rows)


def _compact(rows: Sequence[int], keep_mask: int) -> list[int]:
    # order-preserving compaction onto the vertices in keep_mask
    kept = list(_bits(keep_mask))
    pos = {v: i for i, v in enumerate(kept)}
    out = []
    for v in kept:
        row = 0
        for w in _bits(rows[v] & keep_mask):
            row |= 1 << pos[w]
        out.append(row)
    return out


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Delete a vertex set; survivors are relabelled in their original order."""
    drop = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph")
        drop |= 1 << v
    return _from_rows(_compact(g.adj, ((1 << g.n) - 1) & ~drop))


def induced_subgraph(g: Graph, mask: int) -> Graph:
    return _from_rows(_compact(g.adj, mask))


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Contract ``uv`` into ``min(u, v)``; loops and parallel edges are dropped.

    The other endpoint is removed and remaining labels are compacted in order.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not in graph")
    keep, gone = min(u, v), max(u, v)
    rows = list(g.adj)
    merged = (rows[u] | rows[v]) & ~(1 << u) & ~(1 << v)
    rows[keep] = merged
    for w in _bits(merged):
        rows[w] = (rows[w] & ~(1 << gone)) | (1 << keep)
    return _from_rows(_compact(rows, ((1 << g.n) - 1) & ~(1 << gone)))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return _from_rows([full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def cubic_vertex_count(g: Graph) -> int:
    return sum(1 for d in g.degrees() if d == 3)


def is_connected(g: Graph, mask: int | None = None) -> bool:
    """Connectivity of the subgraph induced on ``mask`` (all vertices by default)."""
    if mask is None:
        mask = (1 << g.n) - 1
    if not mask:
        return True
    seen = mask & -mask
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


# -- canonical form -------------------------------------------------------------


def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition (cells as bitmasks).

    Cells are split by neighbour counts into every other cell; the order of the
    resulting cells depends only on those counts, so the procedure commutes
    with relabelling.
    """
    while True:
        changed = False
        out: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in _bits(cell):
                row = adj[v]
                sig = tuple([(row & c).bit_count() for c in cells])
                groups[sig] = groups.get(sig, 0) | (1 << v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                out.extend(groups[s] for s in sorted(groups))
        cells = out
        if not changed:
            return cells


def _certificate(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        row = 0
        for w in _bits(adj[v]):
            row |= 1 << pos[w]
        cert.append(row)
    return tuple(cert)


class _Canon:
    """Individualization-refinement search for the maximal certificate.

    Leaves with identical certificates yield automorphisms, which prune
    sibling branches lying in the same orbit of the pointwise stabiliser of
    the current path.
    """

    def __init__(self, g: Graph) -> None:
        self.adj = g.adj
        self.n = g.n
        self.best: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.autos: list[list[int]] = []

    def run(self) -> tuple[int, ...]:
        n = self.n
        if n == 0:
            return ()
        by_deg: dict[int, int] = {}
        for v in range(n):
            d = popcount(self.adj[v])
            by_deg[d] = by_deg.get(d, 0) | (1 << v)
        cells = _refine(self.adj, [by_deg[d] for d in sorted(by_deg)])
        self._search(cells, [])
        assert self.best is not None
        return self.best

    def _search(self, cells: list[int], path: list[int]) -> None:
        target = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
        if target is None:
            order = [c.bit_length() - 1 for c in cells]
            cert = _certificate(self.adj, order)
            if self.best is None or cert > self.best:
                self.best, self.best_order = cert, order
            elif cert == self.best:
                assert self.best_order is not None
                perm = [0] * self.n
                for a, b in zip(self.best_order, order):
                    perm[a] = b
                self.autos.append(perm)
            return
        cell = cells[target]
        explored: list[int] = []
        for v in _bits(cell):
            if explored and self._same_orbit(v, explored, path):
                continue
            explored.append(v)
            split = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1:]
            self._search(_refine(self.adj, split), path + [v])

    def _same_orbit(self, v: int, explored: list[int], path: list[int]) -> bool:
        gens = [p for p in self.autos if all(p[x] == x for x in path)]
        if not gens:
            return False
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in gens:
            for x in range(self.n):
                a, b = find(x), find(p[x])
                if a != b:
                    parent[a] = b
        root = find(v)
        return any(find(w) == root for w in explored)


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order ``order`` such that ``relabel(g, order)`` is canonical."""
    c = _Canon(g)
    c.run()
    return list(c.best_order or [])


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant key: the graph6 bytes of the canonical relabelling."""
    cert = _Canon(g).run()
    return write_graph6(_from_rows(list(cert))).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and g.canonical_key() == h.canonical_key()


# -- graph6 ------------------------------------------------------------------


def write_graph6(g: Graph) -> str:
    """Standard graph6 encoding (no header, no newline); ``n <= 62``."""
    n = g.n
    if n > 62:
        raise GraphError("graph6 writer supports n <= 62 only")
    bits = [g.adj[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii")
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 line")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphError("graph6 byte outside 63..126")
    n = data[0]
    if n == 63:
        raise GraphError("graph6 with n > 62 is not supported")
    nbits = n * (n - 1) // 2
    if len(data) - 1 != (nbits + 5) // 6:
        raise GraphError(f"graph6 payload length {len(data) - 1} wrong for n={n}")
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} exceeds budget {MAX_VERTICES}")
    bits = []
    for d in data[1:]:
        bits.extend((d >> k) & 1 for k in range(5, -1, -1))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return _from_rows(adj)


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    return combinations(range(n), 2)
