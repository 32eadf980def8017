"""Exact anti-van der Waerden numbers by exhaustive colouring search.

The search assigns colours to vertices in a fixed order.  Colours are
numbered canonically (a vertex may open colour ``j+1`` only once ``1..j``
are in use), which removes colour-permutation symmetry.  An AP whose other
``k-1`` vertices carry ``k-1`` distinct colours forces its last vertex to
reuse one of them; that restriction is pushed onto the last vertex's
colour domain as soon as it is known.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .ap_engine import APIndex, enumerate_k_aps, find_rainbow_k_ap
from .graph_core import Graph, connected_components, distance_matrix

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The node budget ran out before the search could decide."""


class EnumerationTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Colours ``1..r`` by vertex index (``0`` marks an uncoloured vertex)."""

    colors: tuple[int, ...]
    r: int

    @classmethod
    def of(cls, colors: Sequence[int], r: int | None = None) -> Coloring:
        colors = tuple(int(c) for c in colors)
        return cls(colors, max(colors, default=0) if r is None else r)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def is_exact(self) -> bool:
        return set(self.colors) == set(range(1, self.r + 1))

    def classes(self) -> list[frozenset[int]]:
        return [frozenset(v for v, c in enumerate(self.colors) if c == j)
                for j in range(1, self.r + 1)]

    def canonical(self) -> Coloring:
        """Renumber colours by first appearance."""
        remap: dict[int, int] = {}
        out = tuple(remap.setdefault(c, len(remap) + 1) for c in self.colors)
        return Coloring(out, self.r)

    def merge(self, a: int, b: int) -> Coloring:
        """Fold colour ``b`` into ``a`` and close the gap in the numbering."""
        lo, hi = min(a, b), max(a, b)
        out = tuple(lo if c == hi else (c - 1 if c > hi else c) for c in self.colors)
        return Coloring(out, self.r - 1)

    def to_line(self) -> str:
        return " ".join(map(str, self.colors))

    @classmethod
    def from_line(cls, line: str) -> Coloring:
        return cls.of(int(x) for x in line.split())


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: int = 0
    ms: float = 0.0


@dataclass
class AwResult:
    aw: int
    k: int
    extremal: Coloring | None
    stats: SearchStats = field(default_factory=SearchStats)

    def to_dict(self, timing: bool = False) -> dict:
        out = {"aw": self.aw,
               "witness": list(self.extremal.colors) if self.extremal else None,
               "nodes": self.stats.nodes}
        if timing:
            out["ms"] = round(self.stats.ms, 3)
        return out


# --------------------------------------------------------------------------
# search core


def vertex_order(idx: APIndex, how: str = "degree") -> list[int]:
    """Static assignment order.

    ``"degree"`` sorts by descending AP incidence, ties by index.
    ``"greedy"`` starts from the highest-incidence vertex and then repeatedly
    takes the vertex that closes the most APs against the vertices already
    placed (ties by incidence, then index), so constraints bite early.
    """
    n = idx.n
    inc = [len(idx.incidence[v]) for v in range(n)]
    if how == "degree" or n == 0:
        return sorted(range(n), key=lambda v: (-inc[v], v))
    if how != "greedy":
        raise ValueError(f"unknown vertex order {how!r}")
    placed = [False] * n
    missing = [len(ap) for ap in idx.aps]
    closes = [0] * n       # APs that v would complete right now
    touched = [0] * n      # APs with v that already have a placed member
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not placed[u]),
                key=lambda u: (closes[u], touched[u], inc[u], -u))
        placed[v] = True
        order.append(v)
        for a in idx.incidence[v]:
            missing[a] -= 1
            ap = idx.aps[a]
            if missing[a] == 1:
                for u in ap:
                    if not placed[u]:
                        closes[u] += 1
            if missing[a] == len(ap) - 1:
                for u in ap:
                    if not placed[u]:
                        touched[u] += 1
    return order


class _Search:
    """Mutable DFS state over positions ``0..n-1`` of a fixed vertex order.

    With the order fixed, an AP has all but one vertex coloured exactly when
    its second-to-last position is assigned.  At that moment the last
    vertex's colour domain is narrowed (forward checking), which exposes
    wipeouts early and tells how many future vertices can still open a new
    colour.
    """

    def __init__(self, idx: APIndex, r: int, order: Sequence[int], budget: int):
        self.n = n = idx.n
        self.k = idx.k
        self.r = r
        self.order = list(order)
        pos = {v: i for i, v in enumerate(self.order)}
        # fire[i]: (target position, positions coloured once i is) per AP
        fire: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(n)]
        for ap in idx.aps:
            ps = sorted(pos[v] for v in ap)
            fire[ps[-2]].append((ps[-1], tuple(ps[:-1])))
        self.fire = fire
        self.full = (1 << (r + 1)) - 2
        self.domain = [self.full] * n
        self.col = [0] * n
        self.free = n          # unassigned positions whose domain is still full
        self.trail: list[tuple[int, int]] = []
        self.budget = budget
        self.stats = SearchStats()

    def _narrow(self, i: int, c: int) -> bool:
        """Propagate colour ``c`` at position ``i``; False on a wipeout."""
        col, dom, trail = self.col, self.domain, self.trail
        full = self.full
        if self.k == 3:
            bit = 1 << c
            for j, (a, _) in self.fire[i]:
                ca = col[a]
                if ca == c:
                    continue
                old = dom[j]
                new = old & (bit | (1 << ca))
                if new != old:
                    trail.append((j, old))
                    dom[j] = new
                    if old == full:
                        self.free -= 1
                    if not new:
                        return False
        else:
            need = self.k - 1
            for j, others in self.fire[i]:
                bits = 0
                for p in others:
                    bits |= 1 << col[p]
                if bits.bit_count() != need:
                    continue
                old = dom[j]
                new = old & bits
                if new != old:
                    trail.append((j, old))
                    dom[j] = new
                    if old == full:
                        self.free -= 1
                    if not new:
                        return False
        return True

    def _undo(self, mark: int) -> None:
        dom, trail, full = self.domain, self.trail, self.full
        while len(trail) > mark:
            j, old = trail.pop()
            if old == full and dom[j] != full:
                self.free += 1
            dom[j] = old

    def run(self, i: int, used: int, collect: list | None, limit: int | None) -> bool:
        """DFS from position ``i``; return True to stop (first solution found)."""
        st = self.stats
        st.nodes += 1
        if st.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} nodes")
        if i == self.n:
            if used < self.r:
                return False
            if collect is None:
                return True
            collect.append(self.snapshot())
            if limit is not None and len(collect) > limit:
                raise EnumerationTooLarge(f"more than {limit} colorings")
            return False
        # each still-missing colour needs its own vertex with an open domain
        if self.free < self.r - used:
            st.prunes += 1
            return False
        dom = self.domain[i]
        was_free = dom == self.full
        top = used + 1 if used < self.r else self.r
        mask = dom & ((1 << (top + 1)) - 2)
        if was_free:
            self.free -= 1
        col = self.col
        mark = len(self.trail)
        c = 1
        try:
            while mask >> c:
                if mask >> c & 1:
                    col[i] = c
                    if self._narrow(i, c):
                        if self.run(i + 1, c if c > used else used, collect, limit):
                            return True
                    else:
                        st.prunes += 1
                    self._undo(mark)
                c += 1
        finally:
            if was_free:
                self.free += 1
        col[i] = 0
        return False

    def snapshot(self) -> Coloring:
        out = [0] * self.n
        for p, v in enumerate(self.order):
            out[v] = self.col[p]
        return Coloring(tuple(out), self.r)

    def prefixes(self, depth: int) -> list[tuple]:
        """Feasible prefixes ``(colours, used, nodes, prunes)`` in DFS order.

        ``nodes``/``prunes`` are the splitter's counters when the prefix was
        emitted, so sequential statistics can be reconstructed exactly.
        """
        out: list[tuple] = []
        collector = _PrefixCollector(depth, out)
        self.run_prefix(0, 0, collector)
        return out

    def run_prefix(self, i: int, used: int, sink: "_PrefixCollector") -> None:
        st = self.stats
        st.nodes += 1
        if i == sink.depth or i == self.n:
            # the prefix node is expanded again by the worker
            st.nodes -= 1
            sink.out.append((tuple(self.col[:i]), used, st.nodes, st.prunes))
            return
        if self.free < self.r - used:
            st.prunes += 1
            return
        dom = self.domain[i]
        was_free = dom == self.full
        top = used + 1 if used < self.r else self.r
        mask = dom & ((1 << (top + 1)) - 2)
        if was_free:
            self.free -= 1
        mark = len(self.trail)
        c = 1
        while mask >> c:
            if mask >> c & 1:
                self.col[i] = c
                if self._narrow(i, c):
                    self.run_prefix(i + 1, max(used, c), sink)
                else:
                    st.prunes += 1
                self._undo(mark)
            c += 1
        if was_free:
            self.free += 1
        self.col[i] = 0

    def replay(self, prefix: Sequence[int]) -> bool:
        """Assign ``prefix`` to the first positions with propagation."""
        for i, c in enumerate(prefix):
            if self.domain[i] == self.full:
                self.free -= 1
            self.col[i] = c
            if not self._narrow(i, c):
                return False
        return True


@dataclass
class _PrefixCollector:
    depth: int
    out: list


def _solve_prefix(args) -> tuple[Coloring | None, int, int]:
    idx, r, order, budget, prefix, used = args
    s = _Search(idx, r, order, budget)
    found = s.replay(prefix) and s.run(len(prefix), used, None, None)
    return (s.snapshot() if found else None), s.stats.nodes, s.stats.prunes


def exists_rainbow_free_exact(g: Graph | None, idx: APIndex, r: int, *,
                              budget: int = DEFAULT_BUDGET, order: str = "degree",
                              threads: int = 1,
                              stats: SearchStats | None = None) -> Coloring | None:
    """A rainbow-free exact ``r``-colouring, or ``None`` if there is none.

    The result is the first solution in DFS order, so it does not depend on
    ``threads``; neither does the reported node count.
    """
    n = idx.n
    if not 1 <= r <= n:
        return None
    ordv = vertex_order(idx, order)
    stats = stats if stats is not None else SearchStats()
    t0 = time.perf_counter()
    if threads > 1 and n > 6:
        res = _parallel(idx, r, ordv, budget, threads, stats)
    else:
        s = _Search(idx, r, ordv, budget)
        try:
            res = s.snapshot() if s.run(0, 0, None, None) else None
        finally:
            stats.nodes += s.stats.nodes
            stats.prunes += s.stats.prunes
    stats.ms += (time.perf_counter() - t0) * 1000
    return res


def _parallel(idx, r, ordv, budget, threads, stats) -> Coloring | None:
    splitter = _Search(idx, r, ordv, budget)
    prefixes = splitter.prefixes(min(idx.n, 6))
    jobs = [(idx, r, ordv, budget, p[0], p[1]) for p in prefixes]
    nodes = prunes = 0
    with ProcessPoolExecutor(max_workers=threads) as pool:
        # results in prefix order: the first hit is the sequential answer
        for (_, _, n_before, p_before), (witness, wn, wp) in zip(
                prefixes, pool.map(_solve_prefix, jobs)):
            nodes += wn
            prunes += wp
            if n_before + nodes > budget:
                raise BudgetExceeded(f"search exceeded {budget} nodes")
            if witness is not None:
                stats.nodes += n_before + nodes
                stats.prunes += p_before + prunes
                return witness
    stats.nodes += splitter.stats.nodes + nodes
    stats.prunes += splitter.stats.prunes + prunes
    return None


def enumerate_rainbow_free(idx: APIndex, r: int, *, limit: int = 10**6,
                           budget: int = DEFAULT_BUDGET,
                           order: str = "degree") -> list[Coloring]:
    """All rainbow-free exact ``r``-colourings with canonically numbered colours."""
    if not 1 <= r <= idx.n:
        return []
    s = _Search(idx, r, vertex_order(idx, order), budget)
    found: list[Coloring] = []
    s.run(0, 0, found, limit)
    # canonical numbering follows the search order; restate it by vertex index
    return sorted({c.canonical() for c in found}, key=lambda c: c.colors)


# --------------------------------------------------------------------------
# aw


def _trivial_coloring(n: int, r: int) -> Coloring:
    return Coloring(tuple(min(v + 1, r) for v in range(n)), r)


def aw(g: Graph, k: int = 3, *, budget: int = DEFAULT_BUDGET, lower: int | None = None,
       threads: int = 1, order: str = "degree", idx: APIndex | None = None) -> AwResult:
    """Exact ``aw(g, k)`` with an extremal colouring at ``aw - 1``.

    Disconnected graphs are split into components and recombined.  ``lower``
    is a known lower bound; the ascent in ``r`` starts just below it.
    """
    if k < 2:
        raise ValueError("k out of range: need k >= 2")
    comps = connected_components(g)
    if len(comps) > 1:
        return _aw_split(g, comps, k, budget=budget, threads=threads, order=order)
    t0 = time.perf_counter()
    stats = SearchStats()
    n = g.n
    idx = idx or enumerate_k_aps(g, k, distance_matrix(g))
    if len(idx) == 0:
        res = AwResult(n + 1, k, _trivial_coloring(n, n) if n else None, stats)
        stats.ms = (time.perf_counter() - t0) * 1000
        return res
    # every exact (k-1)-colouring is rainbow-free
    r = max(k - 1, (lower or 0) - 1)
    witness = _trivial_coloring(n, k - 1) if k - 1 >= 1 else None
    if r >= k:
        witness = exists_rainbow_free_exact(g, idx, r, budget=budget, threads=threads,
                                            order=order, stats=stats)
        if witness is None:
            raise ValueError(f"lower bound {lower} is wrong: no rainbow-free {r}-colouring")
    while r + 1 <= n:
        nxt = exists_rainbow_free_exact(g, idx, r + 1, budget=budget, threads=threads,
                                        order=order, stats=stats)
        if nxt is None:
            break
        witness, r = nxt, r + 1
    if witness is not None and find_rainbow_k_ap(idx, witness.colors) is not None:
        raise AssertionError("search returned a colouring with a rainbow AP")
    stats.ms = (time.perf_counter() - t0) * 1000
    return AwResult(r + 1, k, witness, stats)


def aw_disconnected(components: Iterable[AwResult | int]) -> int:
    """``1 + sum(aw_i - 1)`` over the components."""
    return 1 + sum((c.aw if isinstance(c, AwResult) else int(c)) - 1 for c in components)


def _aw_split(g: Graph, comps: list[list[int]], k: int, **kw) -> AwResult:
    parts = []
    colors = [0] * g.n
    offset = 0
    stats = SearchStats()
    for comp in comps:
        sub, old = g.induced_subgraph(comp)
        res = aw(sub, k, **kw)
        parts.append(res)
        stats.nodes += res.stats.nodes
        stats.prunes += res.stats.prunes
        stats.ms += res.stats.ms
        # each component keeps aw_i - 1 private colours
        w = res.extremal.colors if res.extremal else ()
        for new, v in enumerate(old):
            colors[v] = offset + w[new] if w else 0
        offset += res.aw - 1
    total = aw_disconnected(parts)
    witness = Coloring(tuple(colors), total - 1) if all(colors) else None
    return AwResult(total, k, witness, stats)


# --------------------------------------------------------------------------
# extremal enumeration and symmetry


def close_group(generators: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """All permutations generated by ``generators`` (plus the identity)."""
    ident = tuple(range(n))
    group = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[v]] for v in range(n))
                if q not in group:
                    group.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(group)


@dataclass
class ExtremalReport:
    raw: int                 # literal colourings, colour names significant
    color_classes: int       # up to colour permutation
    orbits: int | None       # up to colour permutation and the supplied automorphisms
    representatives: list[Coloring]


def enumerate_extremal(g: Graph, idx: APIndex, r: int, *, up_to_symmetry: bool = True,
                       automorphisms: Sequence[Sequence[int]] | None = None,
                       limit: int = 10**6, budget: int = DEFAULT_BUDGET) -> ExtremalReport:
    """Every rainbow-free exact ``r``-colouring, with raw and quotient counts.

    ``automorphisms`` is a generator set of vertex permutations (``perm[v]`` is
    the image of ``v``); the solver never computes automorphism groups itself.
    """
    canon = enumerate_rainbow_free(idx, r, limit=limit, budget=budget)
    raw = len(canon) * _falling(r, r)
    orbits = None
    reps = canon
    if up_to_symmetry and automorphisms:
        group = close_group(automorphisms, g.n)
        seen: dict[tuple[int, ...], Coloring] = {}
        for c in canon:
            key = min(Coloring(tuple(c.colors[p[v]] for v in range(g.n)), r).canonical().colors
                      for p in group)
            seen.setdefault(key, c)
        orbits = len(seen)
        reps = list(seen.values())
    elif not up_to_symmetry:
        reps = [Coloring(tuple(perm[c - 1] for c in col.colors), r)
                for col in canon for perm in itertools.permutations(range(1, r + 1))]
        if len(reps) > limit:
            raise EnumerationTooLarge(f"more than {limit} colorings")
    return ExtremalReport(raw, len(canon), orbits, reps)


def _falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out
