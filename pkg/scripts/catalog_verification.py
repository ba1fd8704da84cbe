"""Run the full theorem suite over the built-in algebras and print a matrix.

One row per (algebra, q); cells count check statuses.  Everything in range
should show zero failures.
"""

from ncg.catalog import affine2, gl2, heisenberg, sl2, twin_nilpotent, twin_solvable
from ncg.field import field_for
from ncg.verify import verify_algebra, worst_status


def row(label, L):
    results = verify_algebra(L)
    counts = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    cells = " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    print(f"{label:18s} worst={worst_status(results):15s} {cells}")
    for r in results:
        if r.status == "fail":
            print(f"    FAIL {r.check}: {r.witness}")


if __name__ == "__main__":
    for q in (2, 3, 4, 5):
        f = field_for(q)
        for name, make in (
            ("heisenberg", heisenberg),
            ("affine2", affine2),
            ("sl2", sl2),
            ("gl2", gl2),
        ):
            row(f"{name}@{q}", make(f))
    row("twin_nilpotent", twin_nilpotent())
    row("twin_solvable", twin_solvable())
