"""Quasiquadratic extensions of the prism with 14 edges, up to isomorphism.

For each class: graph6, whether it is a (minimal) brick, and its degree sequence.
"""

from minbricks.families import prism
from minbricks.graph import write_graph6
from minbricks.predicates import is_brick, is_minimal_brick
from minbricks.transforms import quasiquadratic_extensions


def main() -> None:
    classes = {}
    for g, op in quasiquadratic_extensions(prism()):
        if g.m == 14:
            classes.setdefault(g.canonical_key(), (g, op))
    print(f"{len(classes)} classes of 14-edge quasiquadratic extensions of the prism")
    for key in sorted(classes):
        g, op = classes[key]
        print(write_graph6(g), "brick" if is_brick(g) else "-",
              "minimal" if is_minimal_brick(g) else "-",
              sorted(g.degrees(), reverse=True), op.to_json())


if __name__ == "__main__":
    main()
