"""Generate the minimal-brick catalog and compare it with the brute-force oracle.

    python scripts/census.py --max-vertices 12 --out catalog12.g6
"""

import argparse
import logging
import time

from minbricks.enumerate import ORACLE_SIZES, generate_minimal_bricks, oracle_enumerate_minimal_bricks


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=10)
    ap.add_argument("--out", default=None)
    ap.add_argument("--threads", type=int, default=None)
    ap.add_argument("--skip-oracle", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    t = time.perf_counter()
    cat = generate_minimal_bricks(args.max_vertices, threads=args.threads)
    print(f"generated {len(cat)} minimal bricks in {time.perf_counter() - t:.1f}s")
    print(f"{'n':>3} {'generated':>10} {'oracle':>8}")
    for n in range(4, args.max_vertices + 1, 2):
        gen = cat.keys_with(n)
        ora = "-"
        if n in ORACLE_SIZES and not args.skip_oracle:
            keys = oracle_enumerate_minimal_bricks(n)
            ora = f"{len(keys)}{'' if keys == gen else ' MISMATCH'}"
        print(f"{n:>3} {len(gen):>10} {ora:>8}")
    if args.out:
        cat.write(args.out)


if __name__ == "__main__":
    main()
