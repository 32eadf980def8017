"""Counterexample scans for the two open upper bounds.

Both scans only report what they observe; neither asserts anything.
"""

from __future__ import annotations

import math
import random
import time

from .ap_engine import enumerate_k_aps
from .generators import add_apex, all_graphs_up_to, nonisomorphic_trees, random_tree
from .graph_core import Graph
from .solver import BudgetExceeded, aw
from .trees import tree_facts


def _clock(deadline: float | None) -> bool:
    return deadline is not None and time.perf_counter() > deadline


def scan_tree_log3(*, exhaustive_nmax: int = 10, random_n: tuple[int, int] = (11, 30),
                   random_count: int = 200, seed: int = 0, budget: int = 10**7,
                   seconds: float | None = None) -> dict:
    """Largest ``aw(T,3) - log3(max(l,1))`` seen, for two readings of ``l``.

    ``l`` is either the total number of bijacent vertices or the most found on
    one leaf-to-leaf path.  Exhaustive over trees up to ``exhaustive_nmax``
    vertices, then ``random_count`` uniform labelled trees.
    """
    deadline = None if seconds is None else time.perf_counter() + seconds
    best = {"global": None, "per_path": None}
    scanned = skipped = 0
    stopped = False

    def record(t: Graph, source: str) -> None:
        nonlocal scanned, skipped
        try:
            a = aw(t, 3, budget=budget).aw
        except BudgetExceeded:
            skipped += 1
            return
        scanned += 1
        f = tree_facts(t)
        for key, ell in (("global", f.bijacent_count), ("per_path", f.max_path_bijacent)):
            c = a - math.log(max(ell, 1), 3)
            cur = best[key]
            if cur is None or c > cur["C"] + 1e-12:
                best[key] = {"C": round(c, 6), "aw": a, "ell": ell, "n": t.n,
                             "source": source, "edges": [list(e) for e in t.edges()]}

    for n in range(2, exhaustive_nmax + 1):
        for t in nonisomorphic_trees(n):
            if _clock(deadline):
                stopped = True
                break
            record(t, f"exhaustive n={n}")
    rng = random.Random(seed)
    for i in range(random_count):
        if stopped or _clock(deadline):
            stopped = True
            break
        n = rng.randint(*random_n)
        record(random_tree(n, rng), f"random #{i} n={n}")
    return {"scan": "tree_log3", "trees": scanned, "skipped_budget": skipped,
            "stopped_on_time": stopped, "empirical_C": best}


def scan_dominating(*, ks=(4, 5, 6), base_nmax: int = 6, random_count: int = 100,
                    random_n: tuple[int, int] = (7, 10), edge_p: float = 0.5, seed: int = 0,
                    budget: int = 10**7, seconds: float | None = None) -> dict:
    """Apex graphs whose ``aw(G,k)`` exceeds ``k+1``.

    Graphs with no k-AP at all have ``aw = n+1`` by convention; when
    ``n >= k+1`` they exceed the bound vacuously and are listed separately.

    Bases are every labelled graph on ``1..base_nmax`` vertices followed by
    ``random_count`` G(n, p) graphs.
    """
    deadline = None if seconds is None else time.perf_counter() + seconds
    counter = []
    checked = {k: 0 for k in ks}
    skipped = 0
    stopped = False

    def bases():
        for n in range(1, base_nmax + 1):
            yield from all_graphs_up_to(n)
        rng = random.Random(seed)
        for i in range(random_count):
            n = rng.randint(*random_n)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_p]
            yield Graph.from_edges(n, edges, name=f"random:{i}")

    for base in bases():
        if _clock(deadline):
            stopped = True
            break
        g = add_apex(base)
        for k in ks:
            if g.n < k:
                continue
            try:
                a = aw(g, k, budget=budget).aw
            except BudgetExceeded:
                skipped += 1
                continue
            checked[k] += 1
            if a > k + 1:
                has_ap = len(enumerate_k_aps(g, k)) > 0
                counter.append({"graph": g.name, "n": g.n, "k": k, "aw": a, "has_k_ap": has_ap,
                                "edges": [list(e) for e in g.edges()]})
    return {"scan": "dominating", "checked": {str(k): v for k, v in checked.items()},
            "skipped_budget": skipped, "stopped_on_time": stopped,
            "counterexamples": [c for c in counter if c["has_k_ap"]],
            "vacuous_counterexamples": [c for c in counter if not c["has_k_ap"]]}


SCANS = {"tree_log3": scan_tree_log3, "dominating": scan_dominating}
