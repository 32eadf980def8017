"""Closed-form values and bounds for aw, used to cross-check the solver."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from . import __version__
from .ap_engine import enumerate_k_aps
from .generators import FamilySpec
from .graph_core import Graph, distance_matrix, distance_profile, is_connected

PRIME_TABLE = Path(__file__).with_name("prime_classes.txt")
PRIME_BUDGET = 10**7


class OutOfRange(ValueError):
    pass


class PrimeClassificationError(RuntimeError):
    pass


# --------------------------------------------------------------------------
# paths and cycles


def interval_exponent(n: int) -> tuple[int, bool]:
    """The ``m`` used by the path formula and whether ``n`` lies in its range
    ``7*3^(m-2) + 1 <= n <= 21*3^(m-2)``.

    For ``n = 3`` no ``m`` satisfies the range; ``n = 3^1`` is returned with
    ``False`` so callers can report the anomaly.
    """
    if n < 3:
        raise OutOfRange(f"out of theorem range: n={n} < 3")
    m = 1
    # scaled by 9 to stay in integers
    while 9 * n > 21 * 3**m:
        m += 1
    if 7 * 3**m + 9 <= 9 * n:
        return m, True
    if n == 3:
        return 1, False
    raise OutOfRange(f"out of theorem range: n={n}")


def is_power_of_three(n: int) -> bool:
    while n > 1 and n % 3 == 0:
        n //= 3
    return n == 1


def aw_interval_3(n: int) -> int:
    """aw of ``[n]`` (equivalently of the path ``P_n``) for 3-APs."""
    m, _ = interval_exponent(n)
    return m + 2 if n == 3**m else m + 3


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def load_prime_table(path: Path = PRIME_TABLE) -> dict[int, int]:
    table = {}
    if not path.exists():
        return table
    for line in path.read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            p, a = line.split()
            table[int(p)] = int(a)
    return table


def write_prime_table(table: dict[int, int], path: Path = PRIME_TABLE) -> None:
    """Atomically replace the table file (single writer, readers see old or new)."""
    body = f"# p aw(Z_p,3)  solver {__version__}\n"
    body += "".join(f"{p} {a}\n" for p, a in sorted(table.items()))
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".primes")
    with os.fdopen(fd, "w") as fh:
        fh.write(body)
    os.replace(tmp, path)


@lru_cache(maxsize=None)
def _solve_prime_class(p: int, budget: int) -> int:
    from .generators import generate
    from .solver import BudgetExceeded, aw

    try:
        return aw(generate(FamilySpec("cycle", (p,))), 3, budget=budget).aw
    except BudgetExceeded:
        raise PrimeClassificationError(
            f"prime classification budget exceeded for p={p}") from None


def prime_class(p: int, *, use_table: bool = True, budget: int = PRIME_BUDGET) -> int:
    """aw of the cycle on ``p`` vertices, ``p`` an odd prime (3 or 4)."""
    if use_table:
        table = _cached_table()
        if p in table:
            return table[p]
    return _solve_prime_class(p, budget)


@lru_cache(maxsize=1)
def _cached_table() -> dict[int, int]:
    return load_prime_table()


def aw_cyclic_3(n: int, *, use_table: bool = True, budget: int = PRIME_BUDGET) -> int:
    """aw of ``Z_n`` (equivalently of the cycle ``C_n``) for 3-APs.

    Odd prime powers ``p^e`` contribute ``e`` when aw(Z_p) = 3 and ``2e`` when
    it is 4; the base is 2 for odd ``n`` and 3 for even ``n``.
    """
    if n < 2:
        raise OutOfRange(f"out of theorem range: n={n} < 2")
    total = 3 if n % 2 == 0 else 2
    for p, e in factorize(n).items():
        if p == 2:
            continue
        total += e if prime_class(p, use_table=use_table, budget=budget) == 3 else 2 * e
    return total


def ramsey_paths(m: int, n: int) -> int:
    """Two-colour Ramsey number of the paths ``P_m`` and ``P_n``."""
    if not 2 <= m <= n:
        raise OutOfRange(f"out of range: need n >= m >= 2, got m={m}, n={n}")
    return n + m // 2 - 1


# --------------------------------------------------------------------------
# bound aggregation


@dataclass
class BoundReport:
    lower: list[tuple[int, str]] = field(default_factory=list)
    upper: list[tuple[int, str]] = field(default_factory=list)
    exact: tuple[int, str] | None = None

    @property
    def best_lower(self) -> int | None:
        return max((v for v, _ in self.lower), default=None)

    @property
    def best_upper(self) -> int | None:
        return min((v for v, _ in self.upper), default=None)

    def consistent(self) -> bool:
        lo, hi = self.best_lower, self.best_upper
        if lo is not None and hi is not None and lo > hi:
            return False
        if self.exact is not None:
            v = self.exact[0]
            return (lo is None or v >= lo) and (hi is None or v <= hi)
        return True

    def admits(self, value: int) -> bool:
        lo, hi = self.best_lower, self.best_upper
        ok = (lo is None or value >= lo) and (hi is None or value <= hi)
        return ok and (self.exact is None or self.exact[0] == value)

    def to_dict(self) -> dict:
        return {"lower": [{"value": v, "cite": c} for v, c in self.lower],
                "upper": [{"value": v, "cite": c} for v, c in self.upper],
                "exact": None if self.exact is None
                else {"value": self.exact[0], "cite": self.exact[1]}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _floor_log2(x: int) -> int:
    return x.bit_length() - 1


def family_exact(spec: FamilySpec, k: int) -> tuple[int, str] | None:
    """Exact aw for a generator-built family, when a formula applies."""
    kind, p = spec.kind, spec.params
    if kind == "complete" and p[0] >= k:
        return k, "complete graphs: aw(K_n,k) = k"
    if kind == "star" and 4 <= k <= p[0] + 1:
        return k + 1, "stars: aw(K_{1,n},k) = k+1 for 4 <= k <= n+1"
    if kind == "complete_bipartite" and min(p) >= k:
        return k + k // 2 - 1, "complete bipartite: aw(K_{m,n},k) = k+floor(k/2)-1 for m,n >= k"
    if k != 3:
        return None
    if kind == "hypercube" and p[0] >= 2:
        return (3 if p[0] % 2 == 0 else 4), "hypercubes: 3 for even n, 4 for odd n"
    if kind == "complete_binary_tree" and p[0] >= 2:
        return 4, "complete binary trees: aw(B_n,3) = 4 for n >= 2"
    if kind == "path" and p[0] >= 3:
        return aw_interval_3(p[0]), "paths: interval formula for aw([n],3)"
    if kind == "cycle":
        return aw_cyclic_3(p[0]), "cycles: prime-factor formula for aw(Z_n,3)"
    return None


def bound_report(g: Graph, k: int = 3, *, family: FamilySpec | None = None,
                 product_of: tuple[Graph, Graph] | None = None,
                 tree=None) -> BoundReport:
    """Every applicable bound on ``aw(g, k)`` for a connected graph.

    ``family`` must be the spec ``g`` was generated from; ``product_of`` the
    two factors ``g`` was built from.  Nothing is inferred by isomorphism.
    """
    from .trees import tree_facts

    rep = BoundReport()
    n = g.n
    if not is_connected(g):
        raise ValueError("bound_report needs a connected graph")
    if n >= k - 1:
        rep.lower.append((k, "general: k <= aw(G,k)"))
    rep.upper.append((n + 1, "general: aw(G,k) <= n+1"))
    dm = distance_matrix(g)
    prof = distance_profile(g, dm)
    has_ap = len(enumerate_k_aps(g, k, dm)) > 0

    if not has_ap:
        rep.exact = (n + 1, "no non-degenerate k-AP: aw = n+1")
    if g.m == n * (n - 1) // 2 and n >= k:
        rep.exact = (k, "complete graphs: aw(K_n,k) = k")

    if k == 3 and n >= 2:
        rad = prof.radius
        rep.upper.append((rad + 2 if rad <= 2 else rad + 1, "radius bound"))
        if prof.diameter == 2:
            rep.exact = (3, "diameter 2 graphs: aw(G,3) = 3")
        if g.dominating_vertices():
            rep.upper.append((3, "dominating vertex: aw(G,3) = 3"))

    if k in (4, 5) and g.dominating_vertices():
        rep.upper.append((k + 1, "dominating vertex: aw(G,k) <= k+1 for k in {4,5}"))

    if prof.diameter == 2 and has_ap and k >= 2:
        rep.upper.append((ramsey_paths(k, k), "Ramsey bound with two distance classes"))

    facts = tree if tree is not None else tree_facts(g)
    if k == 3 and facts.is_tree and n >= 2:
        d = facts.diameter
        if d >= 2:
            base = aw_interval_3(d + 1)
            if is_power_of_three(d):
                rep.upper.append((base + 1, "trees: diameter bound (d a power of 3)"))
            else:
                rep.upper.append((base, "trees: diameter bound"))
        ell = facts.bijacent_count
        rep.upper.append((4 if ell == 0 else _floor_log2(ell) + 4, "trees: bijacent log2 bound"))
        if d >= 3 and d % 2 == 1:
            rep.lower.append((4, "trees of odd diameter: aw >= 4"))
            if ell == 0:
                rep.exact = (4, "odd-diameter trees without bijacent vertices: aw = 4")

    if k == 3 and product_of is not None:
        a, b = product_of
        if is_connected(a) and is_connected(b) and a.n >= 2 and b.n >= 2:
            rep.upper.append((4, "Cartesian products: aw(G□H,3) <= 4"))

    if family is not None:
        ex = family_exact(family, k)
        if ex is not None:
            rep.exact = ex
    return rep
