"""Generation and verification of minimal bricks."""

from .enumerate import (Catalog, CatalogEntry, conjecture_stats, generate_minimal_bricks,
                        oracle_enumerate_bricks, oracle_enumerate_minimal_bricks)
from .graph import Graph, canonical_form, graph_from_edges, parse_graph6, write_graph6
from .minor import MinorQuery, is_matching_minor
from .predicates import (classify, has_perfect_matching, is_bicritical, is_brick, is_minimal_brick,
                         is_three_connected)
from .transforms import ExtensionOp, strict_extensions

__version__ = "0.1.0"

__all__ = [
    "Catalog", "CatalogEntry", "ExtensionOp", "Graph", "MinorQuery", "canonical_form", "classify",
    "conjecture_stats", "generate_minimal_bricks", "graph_from_edges", "has_perfect_matching",
    "is_bicritical", "is_brick", "is_matching_minor", "is_minimal_brick", "is_three_connected",
    "oracle_enumerate_bricks", "oracle_enumerate_minimal_bricks", "parse_graph6",
    "strict_extensions", "write_graph6",
]
