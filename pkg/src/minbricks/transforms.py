"""Bicontraction, bisplitting, bisubdivision and the strict extensions.

Labelling conventions (fixed so that an ``ExtensionOp`` replays exactly):

* ``bisubdivide(g, u, v)`` appends ``x = n`` and ``y = n + 1`` and replaces
  ``uv`` by the path ``u, x, y, v``.
* ``bisplit(g, v, side1, side2)`` deletes ``v`` (order-preserving compaction of
  the survivors) and appends the outer vertex for ``side1``, the inner vertex
  and the outer vertex for ``side2``, in that order.
* ``bicontract(g, v0)`` merges ``v0`` and its two neighbours into the smaller
  neighbour label and compacts.

All enumerators yield ``(graph, op)`` pairs lazily.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterator, Optional, Sequence

from .graph import Graph, GraphError, _bits, _compact, _from_rows, add_vertices, with_edge


class TransformError(ValueError):
    pass


# -- primitive moves -----------------------------------------------------------


def bicontract(g: Graph, v0: int) -> Graph:
    """Contract both edges at the degree-2 vertex ``v0``; parallels are dropped."""
    if not 0 <= v0 < g.n or g.degree(v0) != 2:
        raise TransformError(f"vertex {v0} does not have degree 2")
    a, b = g.neighbors(v0)
    keep = min(a, b)
    rows = list(g.adj)
    merged = (rows[a] | rows[b]) & ~((1 << a) | (1 << b) | (1 << v0))
    rows[keep] = merged
    gone = ((1 << a) | (1 << b) | (1 << v0)) & ~(1 << keep)
    for w in _bits(merged):
        rows[w] = (rows[w] & ~gone) | (1 << keep)
    return _from_rows(_compact(rows, ((1 << g.n) - 1) & ~gone))


def _shift(v: int, removed: int) -> int:
    return v - 1 if v > removed else v


def bisplit(g: Graph, v: int, side1: Sequence[int], side2: Sequence[int]) -> Graph:
    """Replace ``v`` by a path ``v1 - v0 - v2``; ``v1`` takes ``side1``, ``v2`` ``side2``."""
    s1, s2 = set(side1), set(side2)
    nbrs = set(g.neighbors(v)) if 0 <= v < g.n else set()
    if not nbrs or s1 & s2 or s1 | s2 != nbrs:
        raise TransformError(f"sides do not partition the neighbourhood of {v}")
    if len(s1) < 2 or len(s2) < 2:
        raise TransformError("each side of a bisplit needs at least two neighbours")
    if g.n + 2 > 31:
        raise GraphError("vertex budget exceeded")
    rows = _compact(g.adj, ((1 << g.n) - 1) & ~(1 << v))
    base = g.n - 1
    v1, v0, v2 = base, base + 1, base + 2
    rows += [0, 0, 0]
    for side, outer in ((s1, v1), (s2, v2)):
        for w in side:
            w = _shift(w, v)
            rows[w] |= 1 << outer
            rows[outer] |= 1 << w
    for outer in (v1, v2):
        rows[outer] |= 1 << v0
        rows[v0] |= 1 << outer
    return _from_rows(rows)


def bisplit_labels(n: int) -> tuple[int, int, int]:
    """Labels ``(outer1, inner, outer2)`` produced by bisplitting a graph on ``n`` vertices."""
    return n - 1, n, n + 1


def bisubdivide(g: Graph, u: int, v: int) -> tuple[Graph, int, int]:
    """Replace ``uv`` by the path ``u, x, y, v``; returns ``(graph, x, y)``."""
    if not g.has_edge(u, v):
        raise TransformError(f"edge ({u}, {v}) not in graph")
    h = add_vertices(g, 2)
    x, y = g.n, g.n + 1
    rows = list(h.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    for a, b in ((u, x), (x, y), (y, v)):
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return _from_rows(rows), x, y


def add_edge(h: Graph, u: int, v: int) -> Graph:
    """``h + uv``; returns ``h`` itself if ``u == v`` or they are already adjacent."""
    return with_edge(h, u, v)


def attach_to_bisubdivision(h: Graph, w: int, u: int, v: int) -> Graph:
    """``h + (w, uv)``: bisubdivide ``uv`` into ``u, x, y, v`` and join ``w`` to ``x``."""
    if w == u or not 0 <= w < h.n:
        raise TransformError("attachment vertex must be a vertex other than u")
    g, x, _ = bisubdivide(h, u, v)
    return with_edge(g, w, x)


def bisplit_partitions(g: Graph, v: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Unordered partitions of ``N(v)`` into two sides of size at least two.

    Each unordered partition is produced once, with the smallest neighbour in
    the first side.
    """
    nbrs = g.neighbors(v)
    d = len(nbrs)
    if d < 4:
        return
    first, rest = nbrs[0], nbrs[1:]
    for k in range(1, d - 2):
        for chosen in combinations(rest, k):
            side1 = (first,) + chosen
            side2 = tuple(w for w in rest if w not in chosen)
            if len(side2) >= 2:
                yield side1, side2


# -- extension ops ------------------------------------------------------------

KINDS = (
    "strict_linear_1split",
    "strict_linear_2split",
    "quasiquadratic",
    "quasiquartic",
    "bilinear",
    "pseudolinear",
)


@dataclass(frozen=True)
class ExtensionOp:
    """One strict extension, with every choice needed to replay it."""

    kind: str
    params: dict[str, Any] = field(hash=False)

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, **self.params}, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str | dict) -> "ExtensionOp":
        data = dict(json.loads(text) if isinstance(text, str) else text)
        kind = data.pop("kind")
        if kind not in KINDS:
            raise TransformError(f"unknown extension kind {kind!r}")
        for k, val in data.items():
            if isinstance(val, list):
                data[k] = tuple(val)
        return cls(kind, data)


def _op(kind: str, **params: Any) -> ExtensionOp:
    return ExtensionOp(kind, params)


def strict_linear_1split(h: Graph, vertex: int, side1, side2, other: int) -> Graph:
    g = bisplit(h, vertex, side1, side2)
    inner = bisplit_labels(h.n)[1]
    if other == inner or g.has_edge(inner, other):
        raise TransformError("the added edge must join the inner vertex to a non-neighbour")
    return with_edge(g, inner, other)


def strict_linear_2split(h: Graph, vertex: int, side1, side2, vertex2: int, side1b, side2b) -> Graph:
    g1 = bisplit(h, vertex, side1, side2)
    inner1 = bisplit_labels(h.n)[1]
    if vertex2 == inner1:
        raise TransformError("the inner vertex has degree 2 and cannot be bisplit")
    g2 = bisplit(g1, vertex2, side1b, side2b)
    return with_edge(g2, _shift(inner1, vertex2), bisplit_labels(g1.n)[1])


def quasiquadratic(h: Graph, u: int, v: int, xp: int, yp: int) -> Graph:
    if u == v or xp == u or yp == v or (xp == v and yp == u):
        raise TransformError("invalid quasiquadratic parameters")
    g, x, y = bisubdivide(with_edge(h, u, v), u, v)
    return with_edge(with_edge(g, x, xp), y, yp)


def quasiquartic(h: Graph, u: int, v: int, a: int, b: int) -> Graph:
    if u == v or {u, v} == {a, b} or (a == b and a in (u, v)):
        raise TransformError("invalid quasiquartic parameters")
    g, x, y = bisubdivide(with_edge(h, u, v), u, v)
    if a != b:
        g, xp, yp = bisubdivide(with_edge(g, a, b), a, b)
    else:
        g = add_vertices(g, 2)
        xp, yp = g.n - 2, g.n - 1
        g = with_edge(with_edge(with_edge(g, a, xp), xp, yp), yp, a)
    return with_edge(with_edge(g, x, xp), y, yp)


def _outer(n: int, outer: int) -> int:
    o1, _, o2 = bisplit_labels(n)
    return o1 if outer == 1 else o2


def bilinear(h: Graph, u: int, side1, side2, outer: int, v: int, w: int) -> Graph:
    """``H' + (u0, v u1) + (y, w)`` where ``H'`` bisplits ``u`` and ``u1`` is the chosen outer vertex."""
    if len({u, v, w}) != 3 or h.has_edge(v, w):
        raise TransformError("invalid bilinear parameters")
    g = bisplit(h, u, side1, side2)
    u0, u1 = bisplit_labels(h.n)[1], _outer(h.n, outer)
    vv, ww = _shift(v, u), _shift(w, u)
    if not g.has_edge(u1, vv):
        raise TransformError("v must be adjacent to the chosen outer vertex")
    g, x, y = bisubdivide(g, vv, u1)
    return with_edge(with_edge(g, u0, x), y, ww)


def pseudolinear(h: Graph, u: int, side1, side2, outer: int, w: int) -> Graph:
    """``H' + (u0, u1 u0) + (b, w)`` where ``H'`` bisplits ``u``."""
    if u == w or h.has_edge(u, w):
        raise TransformError("invalid pseudolinear parameters")
    g = bisplit(h, u, side1, side2)
    u0, u1 = bisplit_labels(h.n)[1], _outer(h.n, outer)
    g, a, b = bisubdivide(g, u1, u0)
    return with_edge(with_edge(g, u0, a), b, _shift(w, u))


_BUILDERS = {
    "strict_linear_1split": lambda h, p: strict_linear_1split(
        h, p["vertex"], p["side1"], p["side2"], p["other"]),
    "strict_linear_2split": lambda h, p: strict_linear_2split(
        h, p["vertex"], p["side1"], p["side2"], p["vertex2"], p["side1b"], p["side2b"]),
    "quasiquadratic": lambda h, p: quasiquadratic(h, p["u"], p["v"], p["xp"], p["yp"]),
    "quasiquartic": lambda h, p: quasiquartic(h, p["u"], p["v"], p["a"], p["b"]),
    "bilinear": lambda h, p: bilinear(
        h, p["u"], p["side1"], p["side2"], p["outer"], p["v"], p["w"]),
    "pseudolinear": lambda h, p: pseudolinear(
        h, p["u"], p["side1"], p["side2"], p["outer"], p["w"]),
}


def replay(h: Graph, op: ExtensionOp) -> Graph:
    return _BUILDERS[op.kind](h, op.params)


# -- enumerators ---------------------------------------------------------------


def _bisplits(h: Graph) -> Iterator[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    for v in range(h.n):
        for s1, s2 in bisplit_partitions(h, v):
            yield v, s1, s2


def quasiquadratic_extensions(h: Graph, both_orientations: bool = True) -> Iterator[tuple[Graph, ExtensionOp]]:
    """All quasiquadratic extensions of ``h``.

    Reversing the base while swapping the attachments (``(u, v, x', y')``
    versus ``(v, u, y', x')``) gives the same graph with ``x`` and ``y``
    exchanged, so ``both_orientations=False`` keeps only ``u < v``.
    """
    n = h.n
    for u in range(n):
        for v in range(n):
            if u == v or (not both_orientations and v < u):
                continue
            quadratic = not h.has_edge(u, v)
            for xp in range(n):
                if xp == u:
                    continue
                for yp in range(n):
                    if yp == v or (xp == v and yp == u):
                        continue
                    yield quasiquadratic(h, u, v, xp, yp), _op(
                        "quasiquadratic", u=u, v=v, xp=xp, yp=yp, quadratic=quadratic)


def quasiquartic_extensions(h: Graph, both_orientations: bool = True) -> Iterator[tuple[Graph, ExtensionOp]]:
    """All quasiquartic extensions; ``(u, v, a, b)`` and ``(v, u, b, a)`` are isomorphic."""
    n = h.n
    for u in range(n):
        for v in range(n):
            if u == v or (not both_orientations and v < u):
                continue
            for a in range(n):
                for b in range(n):
                    if {a, b} == {u, v} or (a == b and a in (u, v)):
                        continue
                    quartic = a != b and h.has_edge(u, v) and h.has_edge(a, b)
                    yield quasiquartic(h, u, v, a, b), _op(
                        "quasiquartic", u=u, v=v, a=a, b=b, quartic=quartic)


def bilinear_extensions(h: Graph) -> Iterator[tuple[Graph, ExtensionOp]]:
    for u, s1, s2 in _bisplits(h):
        for outer, side in ((1, s1), (2, s2)):
            for v in side:
                for w in range(h.n):
                    if w in (u, v) or h.has_edge(v, w):
                        continue
                    yield bilinear(h, u, s1, s2, outer, v, w), _op(
                        "bilinear", u=u, side1=s1, side2=s2, outer=outer, v=v, w=w)


def pseudolinear_extensions(h: Graph) -> Iterator[tuple[Graph, ExtensionOp]]:
    for u, s1, s2 in _bisplits(h):
        for outer in (1, 2):
            for w in range(h.n):
                if w == u or h.has_edge(u, w):
                    continue
                yield pseudolinear(h, u, s1, s2, outer, w), _op(
                    "pseudolinear", u=u, side1=s1, side2=s2, outer=outer, w=w)


def linear_edge_additions(h: Graph) -> Iterator[tuple[Graph, tuple[int, int]]]:
    """The non-strict linear extensions: join two nonadjacent vertices."""
    for u, v in combinations(range(h.n), 2):
        if not h.has_edge(u, v):
            yield with_edge(h, u, v), (u, v)


def strict_linear_extensions(h: Graph, max_vertices: Optional[int] = None) -> Iterator[tuple[Graph, ExtensionOp]]:
    inner = bisplit_labels(h.n)[1]
    for v, s1, s2 in _bisplits(h):
        g = bisplit(h, v, s1, s2)
        for other in range(g.n):
            if other != inner and not g.has_edge(inner, other):
                yield with_edge(g, inner, other), _op(
                    "strict_linear_1split", vertex=v, side1=s1, side2=s2, other=other)
    if max_vertices is not None and h.n + 4 > max_vertices:
        return
    for v, s1, s2 in _bisplits(h):
        g1 = bisplit(h, v, s1, s2)
        for v2, t1, t2 in _bisplits(g1):
            yield strict_linear_2split(h, v, s1, s2, v2, t1, t2), _op(
                "strict_linear_2split", vertex=v, side1=s1, side2=s2,
                vertex2=v2, side1b=t1, side2b=t2)


def strict_extensions(h: Graph, max_vertices: Optional[int] = None) -> Iterator[tuple[Graph, ExtensionOp]]:
    """All strict extensions of ``h``, one representative per isomorphism class.

    With ``max_vertices`` set, extensions that would exceed it are skipped
    without being built.
    """
    seen: set[bytes] = set()
    streams = [strict_linear_extensions(h, max_vertices),
               quasiquadratic_extensions(h, both_orientations=False)]
    if max_vertices is None or h.n + 4 <= max_vertices:
        streams += [quasiquartic_extensions(h, both_orientations=False),
                    bilinear_extensions(h), pseudolinear_extensions(h)]
    elif h.n + 2 > max_vertices:
        return
    for stream in streams:
        for g, op in stream:
            if max_vertices is not None and g.n > max_vertices:
                continue
            key = g.canonical_key()
            if key not in seen:
                seen.add(key)
                yield g, op


def delta(h: Graph, g: Graph) -> tuple[int, int]:
    return g.n - h.n, g.m - h.m
