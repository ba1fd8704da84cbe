"""Run the exhaustive small censuses and print the graph-class tables.

Shows how structurally distinct algebras (nilpotent vs solvable-only)
collapse onto the same non-commuting graph, the pattern the twin builtins
reproduce in isolation.
"""

import time

from ncg.catalog import census
from ncg.field import GF


def report(dim: int, field: GF) -> None:
    t0 = time.perf_counter()
    c = census(dim, field)
    elapsed = time.perf_counter() - t0
    print(
        f"dim {dim} over F_{field.q}: {c.candidates} candidates, "
        f"{c.valid} valid, {c.non_abelian} non-abelian ({elapsed:.2f}s)"
    )
    for cl in c.classes:
        structures = ", ".join(
            f"nilpotency {s['nilpotency_class']} / solvable {s['solvable']} x{s['count']}"
            for s in cl["structures"]
        )
        print(
            f"  graph class {cl['class']}: {cl['count']} tensors, "
            f"{cl['order']} vertices, {cl['size']} edges  [{structures}]"
        )
    print()


if __name__ == "__main__":
    report(2, GF(2))
    report(3, GF(2))
    report(2, GF(3))
