"""List strict extensions of small catalog bricks that are not bricks.

Every case found is a quasiquartic extension whose bases u-v and a-b share an
end with v = a or u = b.  Deleting x and v (or y and u) then leaves two
vertices whose only remaining neighbour is the same vertex.
"""

from collections import Counter

from minbricks.enumerate import generate_minimal_bricks
from minbricks.graph import write_graph6
from minbricks.predicates import bicritical_failure, is_brick
from minbricks.transforms import strict_extensions


def main() -> None:
    cat = generate_minimal_bricks(8)
    kinds, total = Counter(), 0
    for e in cat:
        for g, op in strict_extensions(e.graph):
            total += 1
            if not is_brick(g):
                p = op.params
                shared = op.kind == "quasiquartic" and (p["v"] == p["a"] or p["u"] == p["b"])
                kinds[(op.kind, shared)] += 1
                if sum(kinds.values()) <= 5:
                    print(write_graph6(e.graph), "->", write_graph6(g), op.to_json(),
                          "unmatchable pair", bicritical_failure(g))
    print(f"{total} strict extensions of {len(cat)} catalog bricks")
    for (kind, shared), count in sorted(kinds.items()):
        print(f"not a brick: {count} {kind}{' with a shared base end' if shared else ''}")


if __name__ == "__main__":
    main()
