"""Rainbow APs via monochromatic paths in a distance-coloured complete graph.

Pick one vertex per colour, join every pair and colour the edge by the
graph distance.  A path on ``k`` vertices whose edges share one colour ``d``
is a k-AP with common difference ``d``, and it is rainbow because its
vertices came from distinct colour classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .ap_engine import KAP, enumerate_k_aps, is_rainbow
from .graph_core import Graph, distance_matrix


@dataclass(frozen=True)
class EdgeColoredComplete:
    """``K_r`` on ``vertices`` (original labels) with ``color[i][j]`` on edge ij."""

    vertices: tuple[int, ...]
    color: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.vertices)

    def dump(self) -> str:
        rows = []
        for i in range(self.r):
            rows.append(" ".join(str(self.color[i][j]) for j in range(i + 1, self.r)))
        return "\n".join(rows).rstrip() + "\n"


@dataclass(frozen=True)
class BridgeOutcome:
    status: str              # "found", "not_found", "no_k_ap"
    ap: KAP | None = None
    representatives: tuple[int, ...] = ()


def build_distance_complete(g: Graph, representatives: Sequence[int], dm=None) -> EdgeColoredComplete:
    reps = tuple(representatives)
    if len(set(reps)) != len(reps):
        raise ValueError("duplicate representative")
    dm = dm or distance_matrix(g)
    color = tuple(tuple(0 if a == b else int(dm(a, b)) for b in reps) for a in reps)
    return EdgeColoredComplete(reps, color)


def find_monochromatic_path(kc: EdgeColoredComplete, k: int) -> list[int] | None:
    """First ``k``-vertex path with all edges one colour (indices into ``kc``).

    Search order: start vertex, then next vertex, both ascending; the first
    edge fixes the colour.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    r = kc.r
    col = kc.color

    def extend(path: list[int], c: int) -> bool:
        if len(path) == k:
            return True
        last = path[-1]
        for w in range(r):
            if w not in path and col[last][w] == c:
                path.append(w)
                if extend(path, c):
                    return True
                path.pop()
        return False

    for s in range(r):
        for t in range(r):
            if t != s:
                path = [s, t]
                if extend(path, col[s][t]):
                    return path
    return None


def _representative_sets(colors: Sequence[int], exhaustive: bool):
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    ordered = [classes[c] for c in sorted(classes)]
    if not exhaustive:
        yield tuple(cls[0] for cls in ordered)
        return
    yield from itertools.product(*ordered)


def rainbow_via_bridge(g: Graph, colors, k: int, *, exhaustive: bool = False,
                       budget: int = 10**6) -> BridgeOutcome:
    """Look for a rainbow k-AP through the distance-coloured complete graph.

    The default tries the lowest-index vertex of every colour.  A
    ``not_found`` there does not rule out rainbow APs; ``exhaustive`` tries
    every choice of representatives (at most ``budget`` choices).
    """
    cols = list(getattr(colors, "colors", colors))
    dm = distance_matrix(g)
    if len(enumerate_k_aps(g, k, dm)) == 0:
        return BridgeOutcome("no_k_ap")
    last: tuple[int, ...] = ()
    for t, reps in enumerate(_representative_sets(cols, exhaustive)):
        if t >= budget:
            raise RuntimeError(f"representative budget {budget} exceeded")
        last = reps
        kc = build_distance_complete(g, reps, dm)
        path = find_monochromatic_path(kc, k)
        if path is None:
            continue
        witness = tuple(reps[i] for i in path)
        ap = KAP(witness, int(dm(witness[0], witness[1])))
        if not (ap.is_valid(dm) and is_rainbow(cols, ap)):
            raise AssertionError(f"bridge produced a non-rainbow or invalid AP {witness}")
        return BridgeOutcome("found", ap, reps)
    return BridgeOutcome("not_found", None, last)
