"""Cubic-vertex fraction of generated minimal bricks, per vertex count.

Prints a table and the graphs attaining the smallest fraction at each order.
"""

import argparse

from minbricks.enumerate import Catalog, conjecture_stats, generate_minimal_bricks
from minbricks.graph import write_graph6


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=10)
    ap.add_argument("--catalog", default=None, help="read a catalog instead of generating")
    args = ap.parse_args()
    cat = Catalog.read(args.catalog) if args.catalog else generate_minimal_bricks(args.max_vertices)

    stats = conjecture_stats(cat)
    print(f"{'n':>3} {'count':>6} {'min cubic':>9} {'min frac':>9} {'mean frac':>9}")
    for n, row in stats["by_vertices"].items():
        print(f"{n:>3} {row['count']:>6} {row['min_cubic_count']:>9} "
              f"{row['min_ratio']:>9.4f} {row['mean_ratio']:>9.4f}")
    print(f"overall minimum fraction {stats['min_ratio']:.4f} at {stats['argmin']}")
    for n in sorted({e.vertex_count for e in cat}):
        es = cat.by_vertices(n)
        low = min(e.cubic_count for e in es)
        worst = [write_graph6(e.graph) for e in es if e.cubic_count == low]
        print(f"n={n}: cubic count {low} attained by {len(worst)}: {' '.join(worst[:5])}")


if __name__ == "__main__":
    main()
