"""Minimal-brick generation by strict extensions, and a brute-force oracle."""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from statistics import mean
from typing import Iterable, Iterator, Optional, Union

from .families import k4, petersen, prism
from .graph import Graph, _from_rows, cubic_vertex_count, parse_graph6, write_graph6
from .predicates import is_brick, is_minimal_brick
from .transforms import ExtensionOp, replay, strict_extensions

log = logging.getLogger(__name__)

SEED_TAGS = {"k4-seed": k4, "prism-seed": prism, "petersen-seed": petersen}
THREADS_ENV = "MINBRICKS_THREADS"


class EnumerationError(ValueError):
    pass


@dataclass(frozen=True)
class ProvenanceStep:
    parent: bytes
    op: ExtensionOp

    def to_dict(self) -> dict:
        return {"parent": self.parent.decode("ascii"), "op": json.loads(self.op.to_json())}


Provenance = Union[str, tuple[ProvenanceStep, ...]]


@dataclass
class CatalogEntry:
    graph: Graph
    key: bytes
    provenance: Provenance

    @property
    def vertex_count(self) -> int:
        return self.graph.n

    @property
    def edge_count(self) -> int:
        return self.graph.m

    @property
    def cubic_count(self) -> int:
        return cubic_vertex_count(self.graph)

    def seed(self) -> str:
        if isinstance(self.provenance, str):
            return self.provenance
        raise EnumerationError("entry is not a seed")

    def sidecar_record(self) -> dict:
        prov = self.provenance if isinstance(self.provenance, str) else [
            s.to_dict() for s in self.provenance]
        return {
            "key": self.key.decode("ascii"),
            "n": self.vertex_count,
            "m": self.edge_count,
            "cubic_count": self.cubic_count,
            "provenance": prov,
        }


@dataclass
class Catalog:
    max_vertices: int
    entries: dict[bytes, CatalogEntry] = field(default_factory=dict)

    def __contains__(self, key: bytes) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.ordered())

    def ordered(self) -> list[CatalogEntry]:
        return sorted(self.entries.values(), key=lambda e: (e.vertex_count, e.key))

    def keys_with(self, n: int) -> set[bytes]:
        return {k for k, e in self.entries.items() if e.vertex_count == n}

    def by_vertices(self, n: int) -> list[CatalogEntry]:
        return [e for e in self.ordered() if e.vertex_count == n]

    def write(self, g6_path: str, sidecar_path: Optional[str] = None) -> None:
        """One graph6 line per entry plus a JSON-lines provenance sidecar."""
        sidecar_path = sidecar_path or sidecar_for(g6_path)
        with open(g6_path, "w") as fg, open(sidecar_path, "w") as fs:
            for e in self.ordered():
                fg.write(write_graph6(e.graph) + "\n")
                fs.write(json.dumps(e.sidecar_record(), sort_keys=True) + "\n")

    @classmethod
    def read(cls, g6_path: str, sidecar_path: Optional[str] = None) -> "Catalog":
        sidecar_path = sidecar_path or sidecar_for(g6_path)
        with open(g6_path) as fg:
            graphs = [parse_graph6(line) for line in fg if line.strip()]
        records: list[dict] = []
        if os.path.exists(sidecar_path):
            with open(sidecar_path) as fs:
                records = [json.loads(line) for line in fs if line.strip()]
        cat = cls(max_vertices=max((g.n for g in graphs), default=0))
        for i, g in enumerate(graphs):
            prov: Provenance = ()
            if i < len(records):
                raw = records[i]["provenance"]
                prov = raw if isinstance(raw, str) else tuple(
                    ProvenanceStep(s["parent"].encode("ascii"), ExtensionOp.from_json(s["op"]))
                    for s in raw)
            key = g.canonical_key()
            cat.entries[key] = CatalogEntry(g, key, prov)
        return cat


def sidecar_for(g6_path: str) -> str:
    root, _ = os.path.splitext(g6_path)
    return root + ".jsonl"


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _extend(args: tuple[Graph, int]) -> list[tuple[bytes, Graph, ExtensionOp]]:
    h, max_vertices = args
    return [(g.canonical_key(), g, op) for g, op in strict_extensions(h, max_vertices)]


def _classify(g: Graph) -> bool:
    return is_minimal_brick(g)


def generate_minimal_bricks(max_vertices: int, include_petersen: bool = True,
                            threads: Optional[int] = None) -> Catalog:
    """Close ``{K4, prism}`` under strict extensions that stay minimal bricks.

    Sources are processed in order of vertex count; since extensions only add
    vertices, every entry on ``k`` vertices is known before any ``k``-vertex
    source is extended, so a single ascending pass reaches the fixed point.
    The Petersen graph is never extended and is added at the end.
    """
    if max_vertices % 2 or not 4 <= max_vertices <= 16:
        raise EnumerationError("max_vertices must be even and between 4 and 16")
    threads = threads or default_threads()
    pkey = petersen().canonical_key()
    cat = Catalog(max_vertices)
    for tag in ("k4-seed", "prism-seed"):
        g = SEED_TAGS[tag]()
        if g.n <= max_vertices:
            cat.entries[g.canonical_key()] = CatalogEntry(g, g.canonical_key(), tag)
    rejected: set[bytes] = set()
    pool = ProcessPoolExecutor(threads) if threads > 1 else None
    try:
        for size in range(4, max_vertices - 1, 2):
            sources = cat.by_vertices(size)
            if not sources:
                continue
            jobs = [(e.graph, max_vertices) for e in sources]
            results = pool.map(_extend, jobs, chunksize=1) if pool else map(_extend, jobs)
            fresh: dict[bytes, tuple[Graph, bytes, ExtensionOp]] = {}
            for src, outs in zip(sources, results):
                for key, g, op in outs:
                    if key in cat or key in rejected or key in fresh or key == pkey:
                        continue
                    fresh[key] = (g, src.key, op)
            keys = sorted(fresh)
            graphs = [fresh[k][0] for k in keys]
            verdicts = pool.map(_classify, graphs, chunksize=8) if pool else map(_classify, graphs)
            added = 0
            for key, ok in zip(keys, verdicts):
                if not ok:
                    rejected.add(key)
                    continue
                g, parent, op = fresh[key]
                chain = cat.entries[parent].provenance
                steps = (() if isinstance(chain, str) else chain) + (ProvenanceStep(parent, op),)
                cat.entries[key] = CatalogEntry(g, key, steps)
                added += 1
            log.info("extended %d sources on %d vertices: %d candidates, %d minimal bricks",
                     len(sources), size, len(keys), added)
    finally:
        if pool:
            pool.shutdown()
    if include_petersen and max_vertices >= 10:
        g = petersen()
        cat.entries[pkey] = CatalogEntry(g, pkey, "petersen-seed")
    return cat


def seed_of(entry: CatalogEntry, catalog: Catalog) -> str:
    prov = entry.provenance
    if isinstance(prov, str):
        return prov
    root = catalog.entries[prov[0].parent].provenance
    assert isinstance(root, str)
    return root


def replay_provenance(entry: CatalogEntry, catalog: Catalog) -> Graph:
    """Rebuild an entry from its seed by replaying every recorded extension."""
    if isinstance(entry.provenance, str):
        return SEED_TAGS[entry.provenance]()
    g = SEED_TAGS[seed_of(entry, catalog)]()
    for step in entry.provenance:
        if g.canonical_key() != step.parent:
            raise EnumerationError("provenance chain does not match its parent keys")
        g = replay(g, step.op)
    return g


# -- oracle --------------------------------------------------------------------

ORACLE_SIZES = (4, 6, 8)


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (``2**(n choose 2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield _from_rows(rows)


def _classes_by_augmentation(n: int) -> list[Graph]:
    """Isomorphism classes on ``n`` vertices with minimum degree at least 3.

    Built vertex by vertex: each class on ``k`` vertices is extended by a new
    vertex with every possible neighbourhood and the results are deduplicated
    by canonical key.  Deleting any vertex of a graph with minimum degree
    ``d`` leaves minimum degree at least ``d - 1``, so the class lists at
    ``n - 1`` and ``n - 2`` vertices can be restricted to minimum degree at
    least 2 and 1 without losing anything.
    """
    level = [_from_rows([])]
    for k in range(1, n + 1):
        need = 3 - (n - k)
        nxt: dict[bytes, Graph] = {}
        for h in level:
            prev = h.n
            for nb in range(1 << prev):
                rows = list(h.adj) + [nb]
                for w in range(prev):
                    if nb >> w & 1:
                        rows[w] |= 1 << prev
                if need > 0 and min(bin(r).count("1") for r in rows) < need:
                    continue
                g = _from_rows(rows)
                nxt.setdefault(g.canonical_key(), g)
        level = list(nxt.values())
    return sorted(level, key=lambda g: g.canonical_key())


def _candidate_classes(n: int) -> list[Graph]:
    if n <= 6:
        out: dict[bytes, Graph] = {}
        for g in labeled_graphs(n):
            if g.min_degree() >= 3:
                out.setdefault(g.canonical_key(), g)
        return [out[k] for k in sorted(out)]
    return _classes_by_augmentation(n)


def _check_oracle_size(n: int) -> None:
    if n not in ORACLE_SIZES:
        raise EnumerationError(f"oracle supports n in {ORACLE_SIZES}, not {n}")


def oracle_bricks(n: int) -> list[Graph]:
    _check_oracle_size(n)
    return [g for g in _candidate_classes(n) if is_brick(g)]


def oracle_enumerate_bricks(n: int) -> set[bytes]:
    return {g.canonical_key() for g in oracle_bricks(n)}


def oracle_minimal_bricks(n: int) -> list[Graph]:
    return [g for g in oracle_bricks(n) if is_minimal_brick(g)]


def oracle_enumerate_minimal_bricks(n: int) -> set[bytes]:
    return {g.canonical_key() for g in oracle_minimal_bricks(n)}


# -- conjecture measurement -----------------------------------------------------


def conjecture_stats(entries: Iterable[CatalogEntry] | Catalog) -> dict:
    """Cubic-vertex counts relative to order, per vertex count and overall."""
    rows = sorted(entries, key=lambda e: (e.vertex_count, e.key))
    per: dict[int, list[CatalogEntry]] = {}
    for e in rows:
        per.setdefault(e.vertex_count, []).append(e)
    by_n = {}
    for n, es in sorted(per.items()):
        ratios = [e.cubic_count / n for e in es]
        by_n[str(n)] = {
            "count": len(es),
            "min_cubic_count": min(e.cubic_count for e in es),
            "min_ratio": min(ratios),
            "mean_ratio": round(mean(ratios), 12),
        }
    if not rows:
        return {"entries": 0, "by_vertices": {}, "min_ratio": None, "min_cubic_count": None,
                "argmin": None}
    worst = min(rows, key=lambda e: (e.cubic_count / e.vertex_count, e.vertex_count, e.key))
    return {
        "entries": len(rows),
        "by_vertices": by_n,
        "min_ratio": worst.cubic_count / worst.vertex_count,
        "min_cubic_count": min(e.cubic_count for e in rows),
        "argmin": write_graph6(worst.graph),
    }
