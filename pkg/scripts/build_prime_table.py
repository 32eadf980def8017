"""Classify small odd primes p by aw(Z_p, 3) with the solver and write the table.

    python3 scripts/build_prime_table.py [--pmax 50]
"""

import argparse
import time

from antivdw.formulas import PRIME_TABLE, factorize, prime_class, write_prime_table


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--pmax", type=int, default=50)
    args = ap.parse_args()
    table = {}
    for p in range(3, args.pmax):
        if factorize(p) != {p: 1}:
            continue
        t0 = time.perf_counter()
        table[p] = prime_class(p, use_table=False)
        print(f"p={p:3d} aw={table[p]} ({time.perf_counter() - t0:.2f}s)", flush=True)
    write_prime_table(table)
    print(f"wrote {PRIME_TABLE}")


if __name__ == "__main__":
    main()
