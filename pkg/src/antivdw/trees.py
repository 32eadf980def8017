"""Tree structure used by the tree bounds: bijacent vertices, broken combs,
sibling-leaf reduction and colour-spanning paths."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ap_engine import enumerate_k_aps, find_rainbow_k_ap
from .graph_core import Graph, distance_matrix, is_tree, shortest_path


class NotATree(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class LemmaViolation(AssertionError):
    """A proved structural statement failed: always a bug, never an outcome."""


@dataclass(frozen=True)
class TreeFacts:
    is_tree: bool
    diameter: int | None = None
    diametral_pair: tuple[int, int] | None = None
    bijacent: frozenset[int] = field(default_factory=frozenset)
    max_path_bijacent: int = 0

    @property
    def bijacent_count(self) -> int:
        return len(self.bijacent)


def bijacent_vertices(g: Graph) -> frozenset[int]:
    """Degree-2 vertices whose two neighbours also have degree 2."""
    deg = [g.degree(v) for v in range(g.n)]
    return frozenset(v for v in range(g.n)
                     if deg[v] == 2 and all(deg[u] == 2 for u in g.adjacency[v]))


def leaves(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 1]


def tree_facts(g: Graph) -> TreeFacts:
    if not is_tree(g):
        return TreeFacts(False)
    dm = distance_matrix(g)
    if g.n == 1:
        return TreeFacts(True, 0, (0, 0))
    d = dm.finite_max()
    pair = next((u, v) for u, v in itertools.combinations(range(g.n), 2) if dm(u, v) == d)
    bij = bijacent_vertices(g)
    # maximal paths in a tree run leaf to leaf
    best = 0
    for a, b in itertools.combinations(leaves(g), 2):
        best = max(best, sum(1 for v in shortest_path(g, a, b, dm) if v in bij))
    return TreeFacts(True, d, pair, bij, best)


def reduce_sibling_leaves(g: Graph) -> tuple[Graph, list[int]]:
    """Delete all but the smallest leaf at every vertex carrying several leaves.

    Repeats until no vertex has two leaf neighbours.  Returns the reduced tree
    (relabelled densely) and the map from new labels to original ones.
    """
    if not is_tree(g):
        raise NotATree("reduce_sibling_leaves needs a tree")
    keep = list(range(g.n))
    cur = g
    while True:
        drop = set()
        for v in range(cur.n):
            lv = [u for u in cur.adjacency[v] if cur.degree(u) == 1]
            if len(lv) >= 2 and cur.degree(v) > 1:
                drop.update(lv[1:])
        if not drop:
            return cur, keep
        survivors = [v for v in range(cur.n) if v not in drop]
        cur, old = cur.induced_subgraph(survivors)
        keep = [keep[v] for v in old]


def color_spanning_path(t: Graph, colors) -> list[int]:
    """A path of ``t`` on which every colour of ``colors`` appears.

    Leaves whose colour occurs elsewhere are pruned (smallest label first)
    until every leaf carries a private colour; for a colouring with no
    rainbow 3-AP what remains must be a path.
    """
    cols = list(getattr(colors, "colors", colors))
    if not is_tree(t):
        raise NotATree("color_spanning_path needs a tree")
    if find_rainbow_k_ap(enumerate_k_aps(t, 3), cols) is not None:
        raise PreconditionError("coloring has rainbow 3-AP")
    alive = set(range(t.n))
    count: dict[int, int] = {}
    for v in alive:
        count[cols[v]] = count.get(cols[v], 0) + 1
    deg = {v: t.degree(v) for v in alive}
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if len(alive) > 1 and deg[v] <= 1 and count[cols[v]] > 1:
                alive.remove(v)
                count[cols[v]] -= 1
                for u in t.adjacency[v]:
                    if u in alive:
                        deg[u] -= 1
                changed = True
                break
    if any(deg[v] > 2 for v in alive):
        raise LemmaViolation(f"minimal colour-spanning subtree {sorted(alive)} is not a path")
    ends = sorted(v for v in alive if deg[v] <= 1)
    if len(alive) == 1:
        return [ends[0]]
    return shortest_path(t, ends[0], ends[1])


def broken_comb_check(g: Graph) -> tuple[int, int] | None:
    """Antipodal pair if ``g`` is a broken comb, else ``None``.

    Shape test: along a diametral path every other vertex must be a leaf
    hanging off an interior path vertex, at most one per path vertex.  Then
    the diameter must be realised by exactly one pair of leaves.
    """
    if not is_tree(g):
        return None
    if g.n == 1:
        return None
    dm = distance_matrix(g)
    d = dm.finite_max()
    u, v = next((a, b) for a, b in itertools.combinations(range(g.n), 2) if dm(a, b) == d)
    spine = shortest_path(g, u, v, dm)
    on_spine = set(spine)
    for x in spine:
        pend = [y for y in g.adjacency[x] if y not in on_spine]
        if len(pend) > 1 or any(g.degree(y) != 1 for y in pend):
            return None
    lv = leaves(g)
    pairs = [(a, b) for a, b in itertools.combinations(lv, 2) if dm(a, b) == d]
    return pairs[0] if len(pairs) == 1 else None


def lemma_checks(t: Graph, colors) -> dict:
    """Audit the two broken-comb lemmas on one colouring.

    ``deg3``: every degree-3 vertex shares its colour with all neighbours
    (needs ``r >= 3``).  ``bijacent``: an inner spine vertex at index
    ``2 <= j < d`` whose colour is new relative to ``v_0..v_{j-1}`` is
    bijacent, and symmetrically from the far end (needs ``r >= 4``).  Violations are
    returned as counterexample records.
    """
    cols = list(getattr(colors, "colors", colors))
    pair = broken_comb_check(t)
    if pair is None:
        raise PreconditionError("not a broken comb")
    if find_rainbow_k_ap(enumerate_k_aps(t, 3), cols) is not None:
        raise PreconditionError("coloring has rainbow 3-AP")
    r = len(set(cols))
    if r < 3:
        raise PreconditionError(f"needs at least 3 colours, got {r}")
    u, v = pair
    if cols.count(cols[u]) != 1 or cols.count(cols[v]) != 1:
        raise PreconditionError("antipodal colours are not unique")
    report = {"antipodal": [u, v], "colors": r}
    bad = [{"vertex": z, "neighbors": list(t.adjacency[z])} for z in range(t.n)
           if t.degree(z) == 3 and any(cols[y] != cols[z] for y in t.adjacency[z])]
    report["deg3"] = {"pass": not bad, "counterexamples": bad}
    if r < 4:
        report["bijacent"] = {"pass": True, "applicable": False, "counterexamples": []}
        return report
    path = shortest_path(t, u, v)
    d = len(path) - 1
    bij = bijacent_vertices(t)
    bad = []
    # the far antipode carries a private colour by hypothesis; skip it
    for j in range(2, d):
        if cols[path[j]] not in {cols[x] for x in path[:j]} and path[j] not in bij:
            bad.append({"index": j, "vertex": path[j], "side": "u"})
    for j in range(1, d - 1):
        if cols[path[j]] not in {cols[x] for x in path[j + 1:]} and path[j] not in bij:
            bad.append({"index": j, "vertex": path[j], "side": "v"})
    report["bijacent"] = {"pass": not bad, "applicable": True, "counterexamples": bad}
    return report
