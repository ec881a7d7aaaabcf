"""Constructors for the named graph families.

Vertex orders follow the constructions in the literature so that provenance
records can be read against hand drawings:

* ``planar_ladder(n)``: ``u_i = i - 1``, ``v_i = n + i - 1``.
* ``moebius_ladder(n)``: cycle ``u_1..u_2n`` as ``0..2n-1``.
* ``prism()``: ``v1, v2, v3, u1, u2, u3`` as ``0..5``.
* ``wheel(k)``: hub ``0``, rim ``1..k-1`` in cyclic order.
* biwheels: ``v_1..v_{2t+2}`` as ``0..2t+1``.
* prismoids: path ``v_1..v_t`` as ``0..t-1``, then ``x = t``, ``y = t + 1``.
* ``extremal_gn(n)``: ``x, y, z, t, v_1, u_1, ..., v_n, u_n``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, complement, contract_edge, delete_edge, graph_from_edges


class FamilyError(ValueError):
    pass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


def complete(n: int) -> Graph:
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def k4() -> Graph:
    return complete(4)


# labels for the prism as drawn in the non-minimality example
V1, V2, V3, U1, U2, U3 = range(6)


def prism() -> Graph:
    return graph_from_edges(6, [
        (V1, V2), (V1, V3), (V2, V3),
        (U1, U2), (U1, U3), (U2, U3),
        (U1, V1), (U2, V2), (U3, V3),
    ])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return graph_from_edges(10, outer + inner + spokes)


def planar_ladder(n: int) -> Graph:
    """Two ``n``-cycles ``u_1..u_n`` and ``v_1..v_n`` joined by rungs ``u_i v_i``."""
    _require(n >= 3, "planar ladder needs n >= 3")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + 1) % n))
        edges.append((i, n + i))
    return graph_from_edges(2 * n, edges)


def moebius_ladder(n: int) -> Graph:
    """A ``2n``-cycle plus the ``n`` long diagonals ``u_i u_{n+i}``."""
    _require(n >= 2, "Moebius ladder needs n >= 2")
    edges = [(i, (i + 1) % (2 * n)) for i in range(2 * n)]
    edges += [(i, n + i) for i in range(n)]
    return graph_from_edges(2 * n, edges)


def staircase(n: int) -> Graph:
    """Staircase from the planar ladder with ``n`` rungs (``2n - 2`` vertices).

    Delete ``u_1 u_2`` and contract ``u_1 v_1`` and ``u_2 v_2``.
    """
    _require(n >= 3, "staircase needs a planar ladder with n >= 3")
    g = delete_edge(planar_ladder(n), (0, 1))
    # contracting u_2 v_2 first leaves the labels u_1 = 0 and v_1 = n intact
    g = contract_edge(g, (1, n + 1))
    return contract_edge(g, (0, n))


def wheel(k: int) -> Graph:
    """Hub joined to every vertex of a ``(k-1)``-cycle; ``k`` vertices total."""
    _require(k >= 4, "wheel needs at least 4 vertices")
    rim = k - 1
    edges = [(0, i) for i in range(1, k)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return graph_from_edges(k, edges)


def _biwheel(t: int, upper: bool) -> Graph:
    c = 2 * t
    edges = [(i, (i + 1) % c) for i in range(c)]
    odd_hub, even_hub = c, c + 1
    # v_1, v_3, ... are labels 0, 2, ...
    edges += [(odd_hub, i) for i in range(0, c, 2)]
    edges += [(even_hub, i) for i in range(1, c, 2)]
    if upper:
        edges.append((odd_hub, even_hub))
    return graph_from_edges(c + 2, edges)


def lower_biwheel(t: int) -> Graph:
    _require(t >= 3, "lower biwheel needs t >= 3")
    return _biwheel(t, upper=False)


def upper_biwheel(t: int) -> Graph:
    _require(t >= 2, "upper biwheel needs t >= 2")
    return _biwheel(t, upper=True)


def _prismoid(t: int, upper: bool) -> Graph:
    x, y = t, t + 1
    edges = [(i, i + 1) for i in range(t - 1)]
    # v_i is label i - 1, so "even i" means odd label
    xs = {0, t - 1} | {i - 1 for i in range(2, t + 1, 2)}
    ys = {0, t - 1} | {j - 1 for j in range(1, t + 1, 2)}
    edges += [(x, v) for v in sorted(xs)]
    edges += [(y, v) for v in sorted(ys)]
    if upper:
        edges.append((x, y))
    return graph_from_edges(t + 2, edges)


def lower_prismoid(t: int) -> Graph:
    _require(t >= 4, "lower prismoid needs t >= 4")
    return _prismoid(t, upper=False)


def upper_prismoid(t: int) -> Graph:
    _require(t >= 2, "upper prismoid needs t >= 2")
    return _prismoid(t, upper=True)


def extremal_gn(n: int) -> Graph:
    """Minimal brick on ``2n + 4`` vertices with ``5n + 3`` edges."""
    _require(n >= 2, "extremal family needs n >= 2")
    x, y, z, t = 0, 1, 2, 3
    edges = [(x, t), (y, t), (z, t)]
    for i in range(n):
        v, u = 4 + 2 * i, 5 + 2 * i
        edges += [(x, u), (y, u), (y, v), (z, v), (u, v)]
    return graph_from_edges(2 * n + 4, edges)


def prism_plus_edge() -> Graph:
    return graph_from_edges(6, prism().edges() + [(U1, V2)])


FAMILIES = {
    "k4": lambda _p=None: k4(),
    "prism": lambda _p=None: prism(),
    "petersen": lambda _p=None: petersen(),
    "planar_ladder": planar_ladder,
    "moebius_ladder": moebius_ladder,
    "staircase": staircase,
    "wheel": wheel,
    "lower_biwheel": lower_biwheel,
    "upper_biwheel": upper_biwheel,
    "lower_prismoid": lower_prismoid,
    "upper_prismoid": upper_prismoid,
    "extremal_gn": extremal_gn,
    "prism_plus_edge": lambda _p=None: prism_plus_edge(),
}

PARAMETERLESS = {"k4", "prism", "petersen", "prism_plus_edge"}


@dataclass(frozen=True)
class FamilyKind:
    tag: str
    param: int | None = None


def family(kind: FamilyKind | str, param: int | None = None) -> Graph:
    if isinstance(kind, FamilyKind):
        kind, param = kind.tag, kind.param
    try:
        ctor = FAMILIES[kind]
    except KeyError:
        raise FamilyError(f"unknown family {kind!r}") from None
    if kind in PARAMETERLESS:
        return ctor()
    _require(param is not None, f"family {kind!r} needs a parameter")
    return ctor(param)


def unavoidable_minors() -> dict[str, Graph]:
    """The seven unavoidable matching minors of bricks other than K4, prism, Petersen."""
    return {
        "prism+edge": prism_plus_edge(),
        "lower-prismoid-8": lower_prismoid(6),
        "staircase-8": staircase(5),
        "staircase-10": staircase(6),
        "planar-ladder-10": planar_ladder(5),
        "wheel-6": wheel(6),
        "moebius-ladder-8": moebius_ladder(4),
    }


def edge_bound_exceptions() -> dict[str, Graph]:
    return {"wheel-4": k4(), "prism": prism(), "wheel-6": wheel(6), "wheel-8": wheel(8)}


def prism_as_complement() -> Graph:
    return complement(cycle(6))
