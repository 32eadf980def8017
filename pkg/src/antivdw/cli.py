"""Command-line interface: ``antivdw <command> [--family SPEC | --file PATH] ...``.

Exit codes: 0 success, 1 a verify suite failed, 2 bad input, 3 search budget
exhausted.
"""

from __future__ import annotations

import argparse
import inspect
import json
import os
import sys
from pathlib import Path

from .ap_engine import enumerate_k_aps, find_rainbow_k_ap
from .formulas import PRIME_TABLE, bound_report, factorize, prime_class, write_prime_table
from .generators import (FamilyError, FamilySpec, automorphism_generators, family_graph,
                         parse_family)
from .graph_core import Graph, GraphError, is_connected
from .ramsey import rainbow_via_bridge
from .scan import SCANS
from .solver import BudgetExceeded, Coloring, aw, enumerate_extremal
from .verify import SUITES

EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET = 1, 2, 3


class InputError(Exception):
    pass


def _load_graph(args) -> tuple[Graph, FamilySpec | tuple | None]:
    if args.family:
        try:
            spec = parse_family(args.family)
            return family_graph(spec if not isinstance(spec, tuple) else args.family), spec
        except (FamilyError, GraphError, ValueError) as exc:
            raise InputError(str(exc)) from None
    if args.file:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
        try:
            if text.lstrip().startswith("{"):
                return Graph.from_json(text), None
            return Graph.from_text(text, name=Path(args.file).stem), None
        except (GraphError, ValueError) as exc:
            raise InputError(str(exc)) from None
    raise InputError("one of --family or --file is required")


def _emit(args, obj: dict, human: str) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(human)


def _int(text: str) -> int:
    """Accept ``100000000``, ``1e8`` or ``10**8``."""
    try:
        if "**" in text:
            base, exp = text.split("**")
            return int(base) ** int(exp)
        return int(float(text)) if any(c in text for c in "eE.") else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


# --------------------------------------------------------------------------


def cmd_aw(args) -> int:
    g, _ = _load_graph(args)
    res = aw(g, args.k, budget=args.budget, threads=args.threads)
    witness = res.extremal.to_line() if res.extremal else "-"
    _emit(args, res.to_dict(timing=args.timing),
          f"aw({g.name or 'G'},{args.k}) = {res.aw}\nwitness: {witness}\nnodes: {res.stats.nodes}"
          + (f"\nms: {res.stats.ms:.1f}" if args.timing else ""))
    return 0


def cmd_aps(args) -> int:
    g, _ = _load_graph(args)
    idx = enumerate_k_aps(g, args.k)
    if args.json:
        print(json.dumps({"k": args.k, "count": len(idx),
                          "aps": [{"d": a.diff, "vertices": list(a.witness)} for a in idx]},
                         sort_keys=True))
    else:
        sys.stdout.write(idx.dump())
    return 0


def cmd_bounds(args) -> int:
    g, spec = _load_graph(args)
    if not is_connected(g):
        raise InputError("bounds need a connected graph")
    family = spec if isinstance(spec, FamilySpec) else None
    product_of = None
    if isinstance(spec, tuple):
        product_of = (family_graph(spec[1]), family_graph(spec[2]))
    rep = bound_report(g, args.k, family=family, product_of=product_of)
    out = rep.to_dict()
    if args.solve:
        out["aw"] = aw(g, args.k, budget=args.budget, threads=args.threads).aw
    lines = [f"lower {v}: {c}" for v, c in rep.lower] + [f"upper {v}: {c}" for v, c in rep.upper]
    if rep.exact:
        lines.append(f"exact {rep.exact[0]}: {rep.exact[1]}")
    if args.solve:
        lines.append(f"solver: {out['aw']}")
    _emit(args, out, "\n".join(lines))
    return 0


def cmd_extremal(args) -> int:
    g, spec = _load_graph(args)
    idx = enumerate_k_aps(g, args.k)
    r = args.r
    if r is None:
        r = aw(g, args.k, budget=args.budget, threads=args.threads).aw - 1
    autos = automorphism_generators(spec) if isinstance(spec, FamilySpec) else None
    rep = enumerate_extremal(g, idx, r, automorphisms=autos, budget=args.budget)
    out = {"r": r, "raw": rep.raw, "color_classes": rep.color_classes, "orbits": rep.orbits,
           "representatives": [list(c.colors) for c in rep.representatives]}
    human = [f"r = {r}", f"colourings: {rep.raw}", f"up to colour names: {rep.color_classes}"]
    if rep.orbits is not None:
        human.append(f"up to colour names and symmetry: {rep.orbits}")
    human += [c.to_line() for c in rep.representatives]
    _emit(args, out, "\n".join(human))
    return 0


def cmd_check(args) -> int:
    g, _ = _load_graph(args)
    try:
        c = Coloring.of([int(x) for x in args.coloring.replace(",", " ").split()])
    except ValueError:
        raise InputError(f"cannot parse colouring {args.coloring!r}") from None
    if len(c) != g.n:
        raise InputError(f"colouring has {len(c)} entries, graph has {g.n} vertices")
    hit = find_rainbow_k_ap(enumerate_k_aps(g, args.k), c.colors)
    out = {"exact_colors": len(set(c.colors)),
           "rainbow": None if hit is None else {"d": hit.diff, "vertices": list(hit.witness)}}
    if args.bridge:
        b = rainbow_via_bridge(g, c.colors, args.k, exhaustive=True)
        out["bridge"] = {"status": b.status,
                         "ap": None if b.ap is None else list(b.ap.witness)}
    _emit(args, out, "no rainbow AP" if hit is None else f"rainbow: {hit.dump()}")
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    reports = []
    for name in names:
        fn = SUITES[name]
        kw = {}
        if args.nmax is not None and "nmax" in inspect.signature(fn).parameters:
            kw["nmax"] = args.nmax
        rep = fn(**kw)
        ok &= rep.passed
        reports.append(rep.to_dict())
        if not args.json:
            for c in rep.claims:
                print(f"[{'PASS' if c['pass'] else 'FAIL'}] {name}: {c['id']} ({c['cite']})"
                      + (f" {c['detail']}" if c["detail"] else ""))
    if args.json:
        print(json.dumps(reports[0] if len(reports) == 1 else reports, sort_keys=True))
    return 0 if ok else EXIT_FAIL


def cmd_scan(args) -> int:
    kw = {"seed": args.seed, "budget": args.budget}
    if args.seconds is not None:
        kw["seconds"] = args.seconds
    if args.count is not None:
        kw["random_count"] = args.count
    if args.which == "dominating" and args.ks:
        kw["ks"] = tuple(args.ks)
    rep = SCANS[args.which](**kw)
    print(json.dumps(rep, sort_keys=True, indent=None if args.json else 2))
    return 0


def cmd_primes(args) -> int:
    table = {}
    for p in range(3, args.pmax + 1):
        if factorize(p) == {p: 1}:
            table[p] = prime_class(p, use_table=False, budget=args.budget)
    if args.write:
        write_prime_table(table)
    _emit(args, {str(p): a for p, a in table.items()},
          "\n".join(f"{p} {a}" for p, a in table.items())
          + (f"\nwritten to {PRIME_TABLE}" if args.write else ""))
    return 0


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-k", type=int, default=3, help="AP length (default 3)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget", type=_int, default=10**8, help="search node budget")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--seed", type=int, default=0)

    source = argparse.ArgumentParser(add_help=False)
    grp = source.add_mutually_exclusive_group(required=True)
    grp.add_argument("--family", help='e.g. "path:9", "kbipartite:5,5", "product:(path:3)x(cycle:4)"')
    grp.add_argument("--file", help="edge list (first line 'n m') or JSON graph")

    p = argparse.ArgumentParser(prog="antivdw", description="Anti-van der Waerden numbers of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("aw", parents=[common, source], help="compute aw(G,k)")
    s.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identity)")
    s.set_defaults(func=cmd_aw)

    s = sub.add_parser("aps", parents=[common, source], help="list every k-AP")
    s.set_defaults(func=cmd_aps)

    s = sub.add_parser("bounds", parents=[common, source], help="applicable bounds on aw(G,k)")
    s.add_argument("--solve", action="store_true", help="also run the solver")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("extremal", parents=[common, source],
                       help="enumerate rainbow-free exact r-colourings")
    s.add_argument("-r", type=int, default=None, help="number of colours (default aw-1)")
    s.set_defaults(func=cmd_extremal)

    s = sub.add_parser("check", parents=[common, source], help="look for a rainbow k-AP in a colouring")
    s.add_argument("--coloring", required=True, help='colours by vertex, e.g. "1 2 1 3"')
    s.add_argument("--bridge", action="store_true", help="also try the distance-coloured K_r route")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=sorted(SUITES) + ["all"])
    s.add_argument("--nmax", type=int, default=None)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", parents=[common], help="scan an open bound for counterexamples")
    s.add_argument("which", choices=sorted(SCANS))
    s.add_argument("--seconds", type=float, default=None, help="wall-clock cap")
    s.add_argument("--count", type=int, default=None, help="number of random instances")
    s.add_argument("--ks", type=int, nargs="+", default=None, help="AP lengths (dominating)")
    s.set_defaults(func=cmd_scan, budget=10**7)

    s = sub.add_parser("primes", parents=[common], help="classify odd primes p by aw(Z_p,3)")
    s.add_argument("--pmax", type=int, default=50)
    s.add_argument("--write", action="store_true", help="rewrite the packaged table")
    s.set_defaults(func=cmd_primes)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"error: search budget exhausted ({exc})", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
