"""Verification suites: each checks a family of published claims against the
solver and returns a report ``{"suite", "claims": [{"id", "cite", "pass", "detail"}]}``.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from typing import Callable

from .ap_engine import enumerate_k_aps, find_rainbow_k_ap
from .colorings import (binary_tree_coloring, bipartite_split_coloring,
                        hypercube_antipodal_coloring, hypercube_extremal_coloring, star_coloring)
from .formulas import aw_cyclic_3, aw_interval_3, bound_report, factorize, prime_class
from .generators import (FamilySpec, add_apex, all_graphs_up_to, automorphism_generators,
                         cartesian_product, corpus, generate, nonisomorphic_graphs,
                         nonisomorphic_trees)
from .graph_core import distance_matrix, distance_profile
from .oracles import brute_force_aw, floyd_warshall, naive_k_aps
from .solver import Coloring, aw, enumerate_extremal, enumerate_rainbow_free
from .trees import reduce_sibling_leaves, tree_facts


class Report:
    def __init__(self, suite: str):
        self.suite = suite
        self.claims: list[dict] = []
        self.t0 = time.perf_counter()

    def claim(self, cid: str, cite: str, ok: bool, detail="") -> bool:
        self.claims.append({"id": cid, "cite": cite, "pass": bool(ok), "detail": detail})
        return ok

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.claims)

    @property
    def seconds(self) -> float:
        return time.perf_counter() - self.t0

    def to_dict(self) -> dict:
        return {"suite": self.suite, "claims": self.claims}


def _fam(kind: str, *params: int):
    return generate(FamilySpec(kind, params))


# --------------------------------------------------------------------------


def suite_paths(nmin: int = 3, nmax: int = 27) -> Report:
    rep = Report("paths")
    for n in range(nmin, nmax + 1):
        got, want = aw(_fam("path", n)).aw, aw_interval_3(n)
        rep.claim(f"aw(P_{n},3)", "paths: interval formula", got == want,
                  f"solver {got}, formula {want}")
    return rep


def suite_cycles(nmin: int = 3, nmax: int = 24) -> Report:
    rep = Report("cycles")
    odd_primes = sorted({p for n in range(nmin, nmax + 1) for p in factorize(n) if p > 2})
    classes = {}
    for p in odd_primes:
        classes[p] = prime_class(p, use_table=False)
        rep.claim(f"aw(Z_{p},3) in {{3,4}}", "prime cycles: 3 <= aw <= 4, and 4 forces p >= 17",
                  classes[p] in (3, 4) and (classes[p] == 3 or p >= 17),
                  f"solver class {classes[p]}")
    for n in range(nmin, nmax + 1):
        got, want = aw(_fam("cycle", n)).aw, aw_cyclic_3(n, use_table=False)
        rep.claim(f"aw(C_{n},3)", "cycles: prime-factor formula", got == want,
                  f"solver {got}, formula {want}")
        pn = aw(_fam("path", n)).aw
        rep.claim(f"aw(C_{n},3) <= aw(P_{n},3)", "cycles never exceed paths", got <= pn,
                  f"{got} <= {pn}")
    return rep


def suite_hypercube(nmax: int = 4) -> Report:
    rep = Report("hypercube")
    for n in range(2, nmax + 1):
        want = 3 if n % 2 == 0 else 4
        got = aw(_fam("hypercube", n)).aw
        rep.claim(f"aw(Q_{n},3)", "hypercubes: 3 for even n, 4 for odd n", got == want,
                  f"solver {got}, expected {want}")
    spec = FamilySpec("hypercube", (3,))
    g = generate(spec)
    ext = enumerate_extremal(g, enumerate_k_aps(g, 3), 3,
                             automorphisms=automorphism_generators(spec))
    shape_ok = False
    if ext.orbits == 1:
        c = ext.representatives[0]
        sizes = sorted(len(s) for s in c.classes())
        singles = [min(s) for s in c.classes() if len(s) == 1]
        shape_ok = sizes == [1, 1, 6] and singles[0] ^ singles[1] == 7
    rep.claim("Q_3 unique extremal 3-colouring", "hypercubes: unique rainbow-free exact 3-colouring",
              ext.orbits == 1 and shape_ok,
              f"raw {ext.raw}, up to colours {ext.color_classes}, orbits {ext.orbits}")
    for n in (3, 5):
        c = hypercube_extremal_coloring(n)
        rep.claim(f"Q_{n} antipodal colouring rainbow-free", "hypercubes: extremal colouring",
                  find_rainbow_k_ap(enumerate_k_aps(_fam("hypercube", n), 3), c.colors) is None)
    q4 = _fam("hypercube", 4)
    hit = find_rainbow_k_ap(enumerate_k_aps(q4, 3), hypercube_antipodal_coloring(4).colors)
    rep.claim("Q_4 antipodal colouring has a rainbow 3-AP",
              "hypercubes: {0..0, x, 1..1} with |x| = n/2", hit is not None,
              hit.dump() if hit else "")
    return rep


def suite_binary_trees(hmax: int = 3) -> Report:
    rep = Report("binary_trees")
    for h in range(2, hmax + 1):
        g = _fam("complete_binary_tree", h)
        got = aw(g).aw
        rep.claim(f"aw(B_{h},3)", "complete binary trees: aw = 4", got == 4, f"solver {got}")
        c = binary_tree_coloring(h)
        rep.claim(f"B_{h} colouring rainbow-free", "complete binary trees: explicit colouring",
                  c.is_exact and c.r == 3
                  and find_rainbow_k_ap(enumerate_k_aps(g, 3), c.colors) is None)
    return rep


def suite_stars(nmax: int = 7) -> Report:
    rep = Report("stars")
    for n in range(3, nmax + 1):
        g = _fam("star", n)
        for k in range(4, n + 2):
            got = aw(g, k).aw
            c = star_coloring(n, k)
            rep.claim(f"aw(K_1,{n},{k})", "stars: aw(K_{1,n},k) = k+1",
                      got == k + 1 and c.r == k, f"solver {got}")
    return rep


def suite_bipartite(cases=((4, 4), (5, 5))) -> Report:
    rep = Report("bipartite")
    for n, k in cases:
        g = _fam("complete_bipartite", n, n)
        want = k + k // 2 - 1
        got = aw(g, k).aw
        rep.claim(f"aw(K_{n},{n},{k})", "complete bipartite: k+floor(k/2)-1",
                  got == want, f"solver {got}, expected {want}")
        c = bipartite_split_coloring(n, k)
        rep.claim(f"K_{n},{n} split colouring certifies aw >= {c.r + 1}",
                  "complete bipartite: split colouring",
                  c.r == want - 1 and find_rainbow_k_ap(enumerate_k_aps(g, k), c.colors) is None)
    return rep


def suite_diameter2(nmax: int = 6) -> Report:
    rep = Report("diameter2")
    bad3, bad4, count = [], [], 0
    for g in corpus(nmax, connected_only=True, nmin=3):
        if distance_profile(g).diameter != 2:
            continue
        count += 1
        a3 = aw(g, 3).aw
        if a3 != 3:
            bad3.append((g.name, a3))
        a4 = aw(g, 4).aw
        if a4 > 4 + 4 // 2 - 1:
            bad4.append((g.name, a4))
    rep.claim("aw(G,3) = 3", "diameter 2 graphs", not bad3, f"{count} graphs; failures {bad3[:5]}")
    rep.claim("aw(G,4) <= 5", "diameter 2: aw <= R(P_k,P_k) = k+floor(k/2)-1",
              not bad4, f"{count} graphs; failures {bad4[:5]}")
    return rep


def suite_bounds(nmax: int = 6, tree_nmax: int = 9) -> Report:
    rep = Report("bounds")
    bad_rad, bad_rep, count = [], [], 0
    for g in corpus(nmax, connected_only=True, nmin=2):
        count += 1
        a = aw(g, 3).aw
        rad = distance_profile(g).radius
        cap = rad + 2 if rad <= 2 else rad + 1
        if a > cap:
            bad_rad.append((g.name, a, cap))
        br = bound_report(g, 3)
        if not (br.consistent() and br.admits(a)):
            bad_rep.append((g.name, a, br.to_dict()))
    rep.claim("radius bound", "aw(G,3) <= rad+2 (rad <= 2), rad+1 (rad >= 3)", not bad_rad,
              f"{count} connected graphs; failures {bad_rad[:5]}")
    rep.claim("all applicable bounds bracket aw", "aggregated bounds", not bad_rep,
              f"{count} connected graphs; failures {bad_rep[:3]}")
    bad = {"diam": [], "log2": [], "odd": [], "cor": []}
    trees = 0
    for n in range(2, tree_nmax + 1):
        for t in nonisomorphic_trees(n):
            trees += 1
            a = aw(t).aw
            f = tree_facts(t)
            d, ell = f.diameter, f.bijacent_count
            if d >= 2:
                base = aw_interval_3(d + 1)
                cap = base + 1 if _power_of_three(d) else base
                if a > cap:
                    bad["diam"].append((t.name, a, cap))
            cap = 4 if ell == 0 else math.log2(ell) + 4
            if a > cap + 1e-12:
                bad["log2"].append((t.name, a, ell))
            if d >= 3 and d % 2 == 1:
                if a < 4:
                    bad["odd"].append((t.name, a))
                if ell == 0 and a != 4:
                    bad["cor"].append((t.name, a))
    rep.claim("tree diameter bound", "trees: aw <= aw([d+1],3) (+1 if d = 3^m)",
              not bad["diam"], f"{trees} trees; failures {bad['diam'][:5]}")
    rep.claim("tree bijacent bound", "trees: aw <= 4 (l = 0), log2(l)+4",
              not bad["log2"], f"{trees} trees; failures {bad['log2'][:5]}")
    rep.claim("odd-diameter trees", "trees of odd diameter >= 3: aw >= 4",
              not bad["odd"], f"failures {bad['odd'][:5]}")
    rep.claim("odd diameter, no bijacent", "aw = 4", not bad["cor"], f"failures {bad['cor'][:5]}")
    return rep


def _power_of_three(d: int) -> bool:
    while d > 1 and d % 3 == 0:
        d //= 3
    return d == 1


def suite_products(nmax: int = 4) -> Report:
    rep = Report("products")
    factors = list(corpus(nmax, connected_only=True, nmin=2))
    bad, count = [], 0
    for g, h in itertools.product(factors, repeat=2):
        count += 1
        a = aw(cartesian_product(g, h), 3).aw
        if a > 4:
            bad.append((g.name, h.name, a))
    rep.claim("aw(G□H,3) <= 4", "Cartesian products", not bad,
              f"{count} factor pairs; failures {bad[:5]}")
    for gs, hs in (((3,), (3,)), ((2,), (4,))):
        g, h = _fam("path", *gs), _fam("path", *hs)
        gh = cartesian_product(g, h)
        idx = enumerate_k_aps(gh, 3)
        seen, viol = 0, []
        for r in range(1, gh.n + 1):
            found = enumerate_rainbow_free(idx, r)
            if not found:
                break
            for c in found:
                seen += 1
                blocks = [{c.colors[u + i * g.n] for u in range(g.n)} for i in range(h.n)]
                if any(len(bj - bi) > 1 for bi in blocks for bj in blocks):
                    viol.append(c.colors)
        rep.claim(f"copies differ by <= 1 colour in P_{g.n}□P_{h.n}",
                  "products: |c(G_j) minus c(G_i)| <= 1", not viol,
                  f"{seen} rainbow-free colourings; violations {viol[:3]}")
    return rep


def suite_dominating(nmax: int = 6) -> Report:
    rep = Report("dominating")
    bad, count = [], 0
    for n in range(1, nmax + 1):
        for base in all_graphs_up_to(n):
            g = add_apex(base)
            count += 1
            a3 = aw(g, 3).aw
            if a3 != 3:
                bad.append((g.name, 3, a3))
            for k in (4, 5):
                a = aw(g, k).aw
                if a > k + 1:
                    bad.append((g.name, k, a))
    rep.claim("apex graphs: aw(G,3) = 3 and aw(G,k) <= k+1 for k in {4,5}",
              "dominating vertex", not bad, f"{count} apex graphs; counterexamples {bad[:5]}")
    return rep


def suite_properties(brute_nmax: int = 5, ap_nmax: int = 7, ap_labeled_nmax: int = 5,
                     perm_cases: int = 100, seed: int = 0) -> Report:
    rep = Report("properties")
    bad, count = [], 0
    monotone_bad = []
    for g in corpus(brute_nmax, connected_only=True):
        for k in (3, 4):
            count += 1
            res = aw(g, k)
            want = brute_force_aw(g, k)
            if res.aw != want:
                bad.append((g.name, k, res.aw, want))
            if not _merge_ok(g, k, res.extremal):
                monotone_bad.append((g.name, k))
    rep.claim("solver = brute force", "definition of aw", not bad,
              f"{count} cases; mismatches {bad[:5]}")
    rep.claim("merge monotonicity", "merging two colours keeps a colouring rainbow-free",
              not monotone_bad, f"failures {monotone_bad[:5]}")

    ap_bad, ap_count = [], 0
    graphs = list(corpus(ap_labeled_nmax))
    graphs += [g for g in nonisomorphic_graphs(ap_nmax) if g.n > ap_labeled_nmax]
    for g in graphs:
        dist = floyd_warshall(g)
        for k in range(2, 6):
            ap_count += 1
            fast = {frozenset(a) for a in enumerate_k_aps(g, k).aps}
            if fast != naive_k_aps(g, k, dist):
                ap_bad.append((g.name, k))
    rep.claim("AP enumeration = ordered-tuple oracle", "k-AP definition", not ap_bad,
              f"{ap_count} (graph, k) cases; mismatches {ap_bad[:5]}")

    rng = random.Random(seed)
    perm_bad = []
    pool = [g for g in corpus(6, connected_only=True, nmin=4)]
    for _ in range(perm_cases):
        g = pool[rng.randrange(len(pool))]
        k = rng.choice((3, 4))
        perm = list(range(g.n))
        rng.shuffle(perm)
        a, b = aw(g, k).aw, aw(g.relabel(perm), k).aw
        if a != b:
            perm_bad.append((g.name, perm, k, a, b))
    rep.claim("label invariance", "aw is invariant under relabelling", not perm_bad,
              f"{perm_cases} seeded cases; failures {perm_bad[:3]}")
    return rep


def _merge_ok(g, k, witness: Coloring | None) -> bool:
    if witness is None:
        return True
    idx = enumerate_k_aps(g, k)
    return all(find_rainbow_k_ap(idx, witness.merge(a, b).colors) is None
               for a, b in itertools.combinations(range(1, witness.r + 1), 2))


def suite_trees(nmax: int = 8) -> Report:
    """Sibling-leaf observations on small trees."""
    rep = Report("trees")
    same_bad, red_bad, count = [], [], 0
    for n in range(2, nmax + 1):
        for t in nonisomorphic_trees(n):
            count += 1
            dm = distance_matrix(t)
            leaves = [v for v in range(t.n) if t.degree(v) == 1]
            sib = [(a, b) for a, b in itertools.combinations(leaves, 2) if dm(a, b) == 2]
            idx = enumerate_k_aps(t, 3)
            a = aw(t).aw
            for r in range(3, a):
                for c in enumerate_rainbow_free(idx, r):
                    if any(c.colors[x] != c.colors[y] for x, y in sib):
                        same_bad.append((t.name, c.colors))
            reduced, _ = reduce_sibling_leaves(t)
            b = aw(reduced).aw
            if a != b:
                red_bad.append((t.name, a, b))
    rep.claim("sibling leaves share a colour", "leaves at distance 2, r >= 3", not same_bad,
              f"{count} trees; failures {same_bad[:3]}")
    rep.claim("aw unchanged by sibling-leaf reduction", "reduction of pendant leaves",
              not red_bad, f"{count} trees; differences {red_bad[:5]}")
    return rep


SUITES: dict[str, Callable[..., Report]] = {
    "paths": suite_paths,
    "cycles": suite_cycles,
    "hypercube": suite_hypercube,
    "binary_trees": suite_binary_trees,
    "stars": suite_stars,
    "bipartite": suite_bipartite,
    "diameter2": suite_diameter2,
    "bounds": suite_bounds,
    "products": suite_products,
    "dominating": suite_dominating,
    "properties": suite_properties,
    "trees": suite_trees,
}
