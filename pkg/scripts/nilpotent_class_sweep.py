"""Sweep all valid dim-4 tensors over F_2 for the regular-graph nilpotency bound.

For every nilpotent algebra whose graph is regular (equivalently, all
non-central centralizer dimensions agree), the nilpotency class must be at
most 3.  This is the one theorem whose interesting range starts above the
exhaustive acceptance census, so the sweep lives here as a longer-running
experiment (minutes, not seconds; use --jobs).
"""

import argparse
import time
from concurrent.futures import ProcessPoolExecutor

from ncg.catalog import candidate_count, enumerate_brackets
from ncg.field import GF
from ncg.linalg import projective_reps


def scan_range(args):
    lo, hi = args
    f = GF(2)
    dim = 4
    stats = {"valid": 0, "non_abelian": 0, "nilpotent": 0, "regular_nilpotent": 0,
             "max_class": 0, "counterexamples": []}
    rays = list(projective_reps(f, dim))
    for L in enumerate_brackets(dim, f, index_range=(lo, hi)):
        stats["valid"] += 1
        if L.is_abelian:
            continue
        stats["non_abelian"] += 1
        cls = L.nilpotency_class
        if cls is None:
            continue
        stats["nilpotent"] += 1
        Z = L.center
        dims = {L.centralizer(x).dim for x in rays if x not in Z}
        if len(dims) > 1:
            continue
        stats["regular_nilpotent"] += 1
        stats["max_class"] = max(stats["max_class"], cls)
        if cls > 3:
            stats["counterexamples"].append(L.sc)
    return stats


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--jobs", type=int, default=2)
    args = parser.parse_args()
    total = candidate_count(4, GF(2))
    step = -(-total // (args.jobs * 8))
    ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    t0 = time.time()
    merged = {"valid": 0, "non_abelian": 0, "nilpotent": 0,
              "regular_nilpotent": 0, "max_class": 0, "counterexamples": []}
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        for i, stats in enumerate(pool.map(scan_range, ranges)):
            for k in ("valid", "non_abelian", "nilpotent", "regular_nilpotent"):
                merged[k] += stats[k]
            merged["max_class"] = max(merged["max_class"], stats["max_class"])
            merged["counterexamples"].extend(stats["counterexamples"])
            done = min((i + 1) * step, total)
            print(f"  {done}/{total} candidates ({time.time()-t0:.0f}s)", flush=True)
    print(f"valid tensors:       {merged['valid']}")
    print(f"non-abelian:         {merged['non_abelian']}")
    print(f"nilpotent:           {merged['nilpotent']}")
    print(f"regular + nilpotent: {merged['regular_nilpotent']}")
    print(f"max class among regular nilpotent: {merged['max_class']}")
    print(f"counterexamples to the class bound: {len(merged['counterexamples'])}")


if __name__ == "__main__":
    main()
