"""Node counts and timings of the solver on a few standard families.

    python3 scripts/benchmark_solver.py [--threads 1]
"""

import argparse
import time

from antivdw.generators import family_graph
from antivdw.solver import aw

CASES = [("path:27", 3), ("cycle:24", 3), ("cycle:47", 3), ("hypercube:4", 3),
         ("complete_binary_tree:3", 3), ("kbipartite:5,5", 5), ("star:7", 6),
         ("product:(path:4)x(cycle:4)", 3)]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    for spec, k in CASES:
        t0 = time.perf_counter()
        res = aw(family_graph(spec), k, threads=args.threads)
        print(f"{spec:<28} k={k} aw={res.aw:<3} nodes={res.stats.nodes:<9} "
              f"prunes={res.stats.prunes:<9} {time.perf_counter() - t0:.3f}s")


if __name__ == "__main__":
    main()
