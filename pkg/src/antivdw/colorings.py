"""Explicit rainbow-free colourings that certify lower bounds on aw.

Every constructor checks its output against the AP index before returning.
Named colours map to integers as blue=1, red=2, green=3.
"""

from __future__ import annotations

import itertools

from .ap_engine import enumerate_k_aps, find_rainbow_k_ap
from .generators import FamilySpec, generate
from .graph_core import Graph, distance_matrix, is_tree
from .solver import Coloring

BLUE, RED, GREEN = 1, 2, 3

#: Rainbow-free exact 3-colouring of B_2 (heap labels), found by exhaustive
#: search; the only other class is its mirror image.
B2_FIXTURE = (1, 2, 1, 1, 1, 3, 3)


class ColoringError(ValueError):
    pass


def _certified(g: Graph, colors, k: int) -> Coloring:
    c = Coloring.of(colors)
    if not c.is_exact:
        raise AssertionError(f"constructed colouring is not exact: {c.colors}")
    if find_rainbow_k_ap(enumerate_k_aps(g, k), c.colors) is not None:
        raise AssertionError(f"constructed colouring has a rainbow {k}-AP")
    return c


def odd_diameter_tree_coloring(t: Graph) -> Coloring:
    """Exact 3-colouring of a tree of odd diameter ``d >= 3`` with no rainbow 3-AP.

    With ``(u, v)`` the first diametral pair: ``u`` blue, ``v`` green, other
    vertices green when at distance ``d`` from ``u``, blue when at distance
    ``d`` from ``v``, red otherwise.
    """
    if not is_tree(t):
        raise ColoringError("not a tree")
    dm = distance_matrix(t)
    d = dm.finite_max()
    if d < 3 or d % 2 == 0:
        raise ColoringError(f"diameter not odd >= 3 (got {d})")
    u, v = next((a, b) for a, b in itertools.combinations(range(t.n), 2) if dm(a, b) == d)
    cols = []
    for w in range(t.n):
        if w == u:
            cols.append(BLUE)
        elif w == v or dm(u, w) == d:
            cols.append(GREEN)
        elif dm(v, w) == d:
            cols.append(BLUE)
        else:
            cols.append(RED)
    return _certified(t, cols, 3)


def binary_tree_level_coloring(n: int) -> Coloring:
    """Root red, blue on depth ``n - 1`` (even ``n``) or ``n`` (odd ``n``), green
    elsewhere (unchecked).

    This level colouring is *not* rainbow-free for any ``n >= 3``: for odd
    ``n`` a depth-2 vertex, a leaf in the cousin subtree and the root form a
    3-AP with difference 3.  Kept so the failure can be demonstrated.
    """
    size = (1 << (n + 1)) - 1
    blue_depth = n - 1 if n % 2 == 0 else n
    return Coloring.of([RED if w == 0 else BLUE if _depth(w) == blue_depth else GREEN
                        for w in range(size)], 3)


def _depth(w: int) -> int:
    return (w + 1).bit_length() - 1


def _root_side(w: int) -> int:
    while w > 2:
        w = (w - 1) // 2
    return w


def binary_tree_coloring(n: int) -> Coloring:
    """Exact 3-colouring of ``B_n`` (heap order) with no rainbow 3-AP.

    Red on the leaves below the root's left child, green on depth ``n - 1``
    below its right child, blue elsewhere.  ``B_2`` uses the frozen fixture
    (the mirror image of this pattern).
    """
    if n < 2:
        raise ColoringError("n < 2")
    g = generate(FamilySpec("complete_binary_tree", (n,)))
    if n == 2:
        return _certified(g, B2_FIXTURE, 3)
    cols = []
    for w in range(g.n):
        d, side = _depth(w), _root_side(w)
        cols.append(RED if d == n and side == 1 else GREEN if d == n - 1 and side == 2 else BLUE)
    return _certified(g, cols, 3)


def hypercube_antipodal_coloring(n: int) -> Coloring:
    """``0...0`` green, ``1...1`` blue, everything else red (unchecked)."""
    size = 1 << n
    return Coloring.of([GREEN if w == 0 else BLUE if w == size - 1 else RED
                        for w in range(size)], 3)


def hypercube_extremal_coloring(n: int) -> Coloring:
    """The rainbow-free exact 3-colouring of ``Q_n`` for odd ``n >= 3``."""
    if n % 2 == 0:
        # {0..0, x, 1..1} with x of weight n/2 is a rainbow 3-AP
        raise ColoringError("n even: the antipodal colouring has a rainbow 3-AP")
    if n < 3:
        raise ColoringError("n must be at least 3")
    g = generate(FamilySpec("hypercube", (n,)))
    return _certified(g, hypercube_antipodal_coloring(n).colors, 3)


def star_coloring(n: int, k: int) -> Coloring:
    """Exact k-colouring of ``K_{1,n}`` with no rainbow k-AP, ``4 <= k <= n+1``.

    Centre gets colour 1, leaf ``i`` gets ``i + 1`` for ``i <= k - 2`` and
    ``k`` beyond that.
    """
    if not 4 <= k <= n + 1:
        raise ColoringError(f"need 4 <= k <= n+1, got n={n}, k={k}")
    g = generate(FamilySpec("star", (n,)))
    cols = [1] + [i + 1 if i <= k - 2 else k for i in range(1, n + 1)]
    return _certified(g, cols, k)


def bipartite_split_coloring(n: int, k: int) -> Coloring:
    """Exact ``(k + k//2 - 2)``-colouring of ``K_{n,n}`` with no rainbow k-AP.

    Side X takes colours ``1 .. k//2 - 1`` and side Y the rest, each handed
    out round-robin by vertex index.
    """
    if not (k >= 4 and n >= k):
        raise ColoringError(f"need n >= k >= 4, got n={n}, k={k}")
    g = generate(FamilySpec("complete_bipartite", (n, n)))
    x_colors = list(range(1, k // 2))
    y_colors = list(range(k // 2, k + k // 2 - 1))
    cols = [x_colors[i % len(x_colors)] for i in range(n)]
    cols += [y_colors[i % len(y_colors)] for i in range(n)]
    return _certified(g, cols, k)
