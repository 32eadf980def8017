"""Slow reference implementations, written independently of the fast paths.

They share nothing with the solver or the chain enumerator beyond the
:class:`Graph` container, so agreement is evidence rather than tautology.
"""

from __future__ import annotations

import itertools
import math

from .graph_core import Graph


def floyd_warshall(g: Graph) -> list[list[float]]:
    n = g.n
    d = [[0 if i == j else (1 if g.has_edge(i, j) else math.inf) for j in range(n)]
         for i in range(n)]
    for m in range(n):
        for i in range(n):
            dim = d[i][m]
            for j in range(n):
                if dim + d[m][j] < d[i][j]:
                    d[i][j] = dim + d[m][j]
    return d


def naive_k_aps(g: Graph, k: int, dist=None) -> set[frozenset[int]]:
    """Vertex sets of all non-degenerate k-APs, from every ordered k-tuple."""
    d = dist or floyd_warshall(g)
    out = set()
    for tup in itertools.permutations(range(g.n), k):
        step = d[tup[0]][tup[1]]
        if step == math.inf:
            continue
        if all(d[a][b] == step for a, b in zip(tup[1:], tup[2:])):
            out.add(frozenset(tup))
    return out


def has_rainbow(aps, colors, k: int) -> bool:
    return any(len({colors[v] for v in ap}) == k for ap in aps)


def brute_force_aw(g: Graph, k: int) -> int:
    """aw from the definition: sweep every colouring for r = 1, 2, ..."""
    n = g.n
    aps = naive_k_aps(g, k)
    if not aps:
        return n + 1
    for r in range(1, n + 1):
        exists = False
        for cols in itertools.product(range(1, r + 1), repeat=n):
            if len(set(cols)) == r and not has_rainbow(aps, cols, k):
                exists = True
                break
        if not exists:
            return r
    return n + 1


def count_rainbow_free(g: Graph, k: int, r: int) -> int:
    """Number of rainbow-free exact r-colourings (colour names significant)."""
    aps = naive_k_aps(g, k)
    return sum(1 for cols in itertools.product(range(1, r + 1), repeat=g.n)
               if len(set(cols)) == r and not has_rainbow(aps, cols, k))
