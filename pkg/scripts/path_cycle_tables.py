"""Print aw(P_n,3) and aw(C_n,3) from the solver next to the closed forms.

    python3 scripts/path_cycle_tables.py [--nmax 30]
"""

import argparse
import time

from antivdw.formulas import aw_cyclic_3, aw_interval_3
from antivdw.generators import family_graph
from antivdw.solver import aw


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=30)
    args = ap.parse_args()
    print(f"{'n':>3} {'P_n':>4} {'formula':>7} {'C_n':>4} {'formula':>7} {'nodes':>8} {'s':>6}")
    for n in range(3, args.nmax + 1):
        t0 = time.perf_counter()
        p = aw(family_graph(f"path:{n}"))
        c = aw(family_graph(f"cycle:{n}"))
        flag = "" if (p.aw, c.aw) == (aw_interval_3(n), aw_cyclic_3(n)) else "  MISMATCH"
        print(f"{n:>3} {p.aw:>4} {aw_interval_3(n):>7} {c.aw:>4} {aw_cyclic_3(n):>7} "
              f"{p.stats.nodes + c.stats.nodes:>8} {time.perf_counter() - t0:6.2f}{flag}")


if __name__ == "__main__":
    main()
