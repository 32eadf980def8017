"""Run both open-bound scans to a time budget and save the JSON reports.

    python3 scripts/scan_conjectures.py --seconds 600 --out results/
"""

import argparse
import json
from pathlib import Path

from antivdw.scan import scan_dominating, scan_tree_log3


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seconds", type=float, default=300.0, help="per scan")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    trees = scan_tree_log3(seed=args.seed, seconds=args.seconds, random_count=10**6)
    dom = scan_dominating(ks=(4, 5, 6, 7), seed=args.seed, seconds=args.seconds,
                          random_count=10**6)
    for name, rep in (("tree_log3", trees), ("dominating", dom)):
        (args.out / f"{name}.json").write_text(json.dumps(rep, indent=2, sort_keys=True))
    for key, best in trees["empirical_C"].items():
        print(f"tree_log3 [{key}] trees={trees['trees']} C={best['C']} "
              f"(aw={best['aw']}, l={best['ell']}, n={best['n']})")
    print(f"dominating checked={dom['checked']} counterexamples={len(dom['counterexamples'])} "
          f"vacuous={len(dom['vacuous_counterexamples'])}")


if __name__ == "__main__":
    main()
