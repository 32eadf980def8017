"""Acceptance criteria 1-11, each run in full against its wall-clock limit.

Every criterion prints one ``PASS``/``FAIL`` line (also collected into the
pytest terminal summary).
"""

import time

import pytest

from antivdw import verify

CRITERIA = [
    (1, "paths aw(P_n,3) = interval formula, 3 <= n <= 27", 120, verify.suite_paths, {}),
    (2, "cycles aw(C_n,3) = prime-factor formula, 3 <= n <= 24, primes solved",
     300, verify.suite_cycles, {}),
    (3, "hypercubes Q2..Q4 and unique Q3 extremal class", 60, verify.suite_hypercube, {}),
    (4, "binary trees aw(B2,3) = aw(B3,3) = 4 with certified colourings",
     60, verify.suite_binary_trees, {"hmax": 3}),
    (5, "stars aw(K_1n,k) = k+1, 4 <= k <= n+1, n <= 7", 60, verify.suite_stars, {"nmax": 7}),
    (6, "aw(K44,4) = 5, aw(K55,5) = 6 with split colourings", 300, verify.suite_bipartite, {}),
    (7, "diameter-2 graphs <= 6 vertices: aw3 = 3, aw4 <= 5", 600, verify.suite_diameter2,
     {"nmax": 6}),
    (8, "radius bound (graphs <= 6) and tree bounds (trees <= 9)", 600, verify.suite_bounds,
     {"nmax": 6, "tree_nmax": 9}),
    (9, "products aw(GxH,3) <= 4 and copy colour-difference property", 600,
     verify.suite_products, {"nmax": 4}),
    (10, "apex graphs over <= 6 vertices: aw3 = 3, aw_k <= k+1 for k = 4, 5", 900,
     verify.suite_dominating, {"nmax": 6}),
    (11, "property suites: brute force, merge, AP oracle, relabelling", 600,
     verify.suite_properties, {}),
]


@pytest.mark.parametrize("num,title,limit,suite,kw", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(num, title, limit, suite, kw, acceptance_log):
    t0 = time.perf_counter()
    rep = suite(**kw)
    elapsed = time.perf_counter() - t0
    failed = [c for c in rep.claims if not c["pass"]]
    ok = not failed and elapsed < limit and rep.claims
    line = (f"{'PASS' if ok else 'FAIL'} criterion {num:2d}: {title} "
            f"[{len(rep.claims)} claims, {elapsed:.1f}s / {limit}s]")
    print(line)
    acceptance_log.append(line)
    assert rep.claims, "suite produced no claims"
    assert not failed, failed[:3]
    assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
