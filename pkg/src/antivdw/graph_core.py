"""Immutable simple graphs, BFS distances and distance-derived parameters."""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

#: Distance between vertices in different components.  A float infinity
#: compares above every integer and never wraps under addition.
INF = math.inf


class GraphError(ValueError):
    """Raised for malformed graphs or unparseable graph text."""


class DisconnectedError(ValueError):
    """Raised when an operation needs a connected graph or a connecting path."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.  Use
    :meth:`from_edges` rather than building the adjacency by hand.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length does not match n")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbours of {v} not sorted and distinct")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if v not in self.adjacency[u]:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], name: str = "") -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u},{v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), name)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.adjacency[v]) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def relabel(self, perm: Sequence[int], name: str | None = None) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(
            self.n, ((perm[u], perm[v]) for u, v in self.edges()),
            self.name if name is None else name)

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled ``0..len-1``, plus the new->old map."""
        old = sorted(vertices)
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(old), edges, self.name), old

    def dominating_vertices(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) == self.n - 1]

    # -- serialisation ---------------------------------------------------

    def to_text(self) -> str:
        lines = [f"# {self.name}"] if self.name else []
        lines.append(f"{self.n} {self.m}")
        lines += [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, name: str = "") -> Graph:
        rows = [ln.split() for ln in text.splitlines()
                if ln.strip() and not ln.lstrip().startswith("#")]
        if not rows:
            raise GraphError("empty graph text")
        try:
            n, m = (int(x) for x in rows[0])
            edges = [(int(a), int(b)) for a, b in rows[1:]]
        except ValueError as exc:
            raise GraphError(f"malformed graph text: {exc}") from None
        if len(edges) != m:
            raise GraphError(f"header declares {m} edges, found {len(edges)}")
        return cls.from_edges(n, edges, name)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges()],
                           "name": self.name})

    @classmethod
    def from_json(cls, text: str) -> Graph:
        try:
            obj = json.loads(text)
            return cls.from_edges(int(obj["n"]), obj["edges"], obj.get("name", ""))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"malformed graph JSON: {exc}") from None


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    dist: tuple[tuple[float, ...], ...]

    def __call__(self, u: int, v: int) -> float:
        return self.dist[u][v]

    @property
    def is_connected(self) -> bool:
        return all(d != INF for row in self.dist for d in row)

    def finite_max(self) -> int:
        return max((int(d) for row in self.dist for d in row if d != INF), default=0)


@dataclass(frozen=True)
class DistanceProfile:
    ecc: tuple[int, ...]
    radius: int
    diameter: int
    central: frozenset[int] = field(default_factory=frozenset)


def _bfs(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(_bfs(g, s)) for s in range(g.n)))


def distance_profile(g: Graph, dm: DistanceMatrix | None = None) -> DistanceProfile:
    """Eccentricities, radius, diameter and central vertices of a connected graph."""
    dm = dm or distance_matrix(g)
    if g.n == 0:
        raise DisconnectedError("empty graph has no distance profile")
    if not dm.is_connected:
        raise DisconnectedError("distance profile needs a connected graph")
    ecc = tuple(int(max(row)) for row in dm.dist)
    radius, diameter = min(ecc), max(ecc)
    central = frozenset(v for v, e in enumerate(ecc) if e == radius)
    return DistanceProfile(ecc, radius, diameter, central)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def shortest_path(g: Graph, u: int, v: int, dm: DistanceMatrix | None = None) -> list[int]:
    """Shortest ``u``-``v`` path, always stepping to the smallest admissible vertex."""
    dm = dm or distance_matrix(g)
    if dm(u, v) == INF:
        raise DisconnectedError(f"no path between {u} and {v}")
    path = [u]
    while path[-1] != v:
        here = path[-1]
        path.append(next(w for w in g.adjacency[here] if dm(w, v) == dm(here, v) - 1))
    return path
