"""Machine checks of the edge bound, the three-cubic-vertex theorem,
the K4/prism matching-minor theorem and sparse closure.

Reports are plain data with a JSON form; rendering is left to the CLI.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Optional

from .enumerate import Catalog, CatalogEntry, generate_minimal_bricks, oracle_bricks
from .families import U1, U2, V1, V2, edge_bound_exceptions, k4, prism
from .graph import Graph, delete_edge, with_edge, write_graph6
from .minor import is_matching_minor
from .predicates import is_brick, is_minimal_brick
from .transforms import attach_to_bisubdivision


@dataclass
class Record:
    key: str
    n: int
    m: int
    bound: Optional[float]
    exception_flag: bool
    passed: bool
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


@dataclass
class VerifyReport:
    theorem: str
    scope: int
    records: list[Record] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        return {
            "checked": len(self.records),
            "passed": sum(r.passed for r in self.records),
            "exceptions": sum(r.exception_flag for r in self.records),
        }

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> list[Record]:
        return [r for r in self.records if not r.passed]

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "scope": self.scope,
            "pass": self.ok,
            "summary": self.summary,
            "records": [r.to_dict() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _entries(c: Catalog | Iterable[CatalogEntry]) -> list[CatalogEntry]:
    if isinstance(c, Catalog):
        return c.ordered()
    return sorted(c, key=lambda e: (e.vertex_count, e.key))


def _scope(entries: list[CatalogEntry]) -> int:
    return max((e.vertex_count for e in entries), default=0)


def verify_edge_bound(c: Catalog | Iterable[CatalogEntry]) -> VerifyReport:
    """Every minimal brick on ``2n`` vertices has at most ``5n - 7`` edges,
    apart from the wheels on 4, 6, 8 vertices and the prism."""
    exceptions = {g.canonical_key(): name for name, g in edge_bound_exceptions().items()}
    entries = _entries(c)
    report = VerifyReport("edge-bound", _scope(entries))
    for e in entries:
        bound = 5 * (e.vertex_count // 2) - 7
        name = exceptions.get(e.key)
        within = e.edge_count <= bound
        report.records.append(Record(
            e.key.decode("ascii"), e.vertex_count, e.edge_count, bound,
            exception_flag=name is not None,
            passed=within or name is not None,
            detail={"exception": name, "margin": e.edge_count - bound},
        ))
    return report


def verify_three_cubic(c: Catalog | Iterable[CatalogEntry]) -> VerifyReport:
    entries = _entries(c)
    report = VerifyReport("three-cubic", _scope(entries))
    for e in entries:
        cubic = e.cubic_count
        report.records.append(Record(
            e.key.decode("ascii"), e.vertex_count, e.edge_count, 3,
            exception_flag=False, passed=cubic >= 3, detail={"cubic_count": cubic},
        ))
    return report


def verify_k4_prism_minor(n: int) -> VerifyReport:
    """Every brick on ``n`` vertices (from the oracle) has K4 or the prism as a matching minor."""
    patterns = (("k4", k4()), ("prism", prism()))
    report = VerifyReport("k4-prism-minor", n)
    for g in oracle_bricks(n):
        found = next((name for name, p in patterns if is_matching_minor(p, g)), None)
        report.records.append(Record(
            g.canonical_key().decode("ascii"), g.n, g.m, None,
            exception_flag=False, passed=found is not None, detail={"minor": found},
        ))
    return report


def is_sparse(g: Graph) -> bool:
    return 2 * g.m <= 5 * g.n - 14


def verify_sparse_closure(samples: Iterable[Graph],
                          patterns: Optional[Iterable[Graph]] = None) -> VerifyReport:
    """A minimal brick with a sparse brick as a matching minor is itself sparse.

    ``patterns`` are the candidate minors (by default the generated minimal
    bricks below the largest sample); only sparse bricks of smaller order than
    a sample are tried against it.
    """
    samples = sorted(samples, key=lambda g: (g.n, g.canonical_key()))
    top = max((g.n for g in samples), default=0)
    if patterns is None:
        patterns = [e.graph for e in generate_minimal_bricks(max(4, top - 2)).ordered()] if top > 4 else []
    sparse_patterns = sorted((p for p in patterns if is_sparse(p) and is_brick(p)),
                             key=lambda g: (g.n, g.canonical_key()))
    report = VerifyReport("sparse-closure", top)
    for g in samples:
        witness = next((p for p in sparse_patterns
                        if p.n < g.n and (g.n - p.n) % 2 == 0 and is_matching_minor(p, g)), None)
        sparse = is_sparse(g)
        report.records.append(Record(
            g.canonical_key().decode("ascii"), g.n, g.m, 2.5 * g.n - 7,
            exception_flag=False,
            passed=witness is None or sparse,
            detail={"sparse": sparse,
                    "sparse_minor": None if witness is None else write_graph6(witness)},
        ))
    return report


def non_minimal_extension_example() -> dict[str, Graph]:
    """The quasiquadratic extension of the prism that is a brick but not minimal.

    ``G' = prism + u1v2`` and ``G'' = G' + (u2, u1v2) + v1y``, where ``x, y``
    are the vertices created by bisubdividing ``u1v2``.
    """
    g = prism()
    g1 = with_edge(g, U1, V2)
    g2 = attach_to_bisubdivision(g1, U2, U1, V2)
    y = g1.n + 1
    g2 = with_edge(g2, V1, y)
    return {"G": g, "G'": g1, "G''": g2, "G''-u1v1": delete_edge(g2, (U1, V1))}


def check_non_minimal_example() -> VerifyReport:
    ex = non_minimal_extension_example()
    g2, reduced = ex["G''"], ex["G''-u1v1"]
    brick, reduced_brick, minimal = is_brick(g2), is_brick(reduced), is_minimal_brick(g2)
    report = VerifyReport("non-minimal-extension", g2.n)
    report.records.append(Record(
        g2.canonical_key().decode("ascii"), g2.n, g2.m, None, exception_flag=False,
        passed=brick and reduced_brick and not minimal,
        detail={"brick": brick, "brick_without_u1v1": reduced_brick, "minimal": minimal},
    ))
    return report
