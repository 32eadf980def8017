"""Non-degenerate k-term arithmetic progressions under graph distance.

A k-AP is a set ``{v1..vk}`` of distinct vertices admitting an ordering with
``dist(v_i, v_{i+1}) = d`` for a single finite ``d >= 1``.  Only consecutive
distances are constrained; ``dist(v1, v3)`` is free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .graph_core import INF, DistanceMatrix, Graph, distance_matrix


@dataclass(frozen=True)
class KAP:
    witness: tuple[int, ...]
    diff: int

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.witness)

    @property
    def k(self) -> int:
        return len(self.witness)

    def is_valid(self, dm: DistanceMatrix) -> bool:
        w = self.witness
        return (self.diff >= 1 and len(set(w)) == len(w)
                and all(dm(a, b) == self.diff for a, b in zip(w, w[1:])))

    def dump(self) -> str:
        return f"d={self.diff}: " + " ".join(map(str, self.witness))


@dataclass(frozen=True)
class APIndex:
    """All k-APs of a graph, deduplicated by vertex set.

    ``aps[i]`` is a sorted vertex tuple, ``witnesses[i]`` one valid ordering
    for it and ``incidence[v]`` the ids of APs containing ``v``.
    """

    n: int
    k: int
    aps: tuple[tuple[int, ...], ...]
    witnesses: tuple[KAP, ...]
    incidence: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.aps)

    def __iter__(self):
        return iter(self.witnesses)

    def dump(self) -> str:
        return "".join(ap.dump() + "\n" for ap in self.witnesses)


def _vertices_at_distance(dm: DistanceMatrix) -> list[dict[int, list[int]]]:
    table: list[dict[int, list[int]]] = [{} for _ in range(dm.n)]
    for u in range(dm.n):
        for v in range(dm.n):
            d = dm(u, v)
            if d != INF and d > 0:
                table[u].setdefault(int(d), []).append(v)
    return table


def enumerate_k_aps(g: Graph, k: int, dm: DistanceMatrix | None = None) -> APIndex:
    """Index every non-degenerate k-AP of ``g``.

    Chains ``(v1, .., vi)`` are grown one step at a time through vertices at
    the chain's fixed distance ``d`` from the current end, skipping vertices
    already on the chain.
    """
    if k < 2:
        raise ValueError("k out of range: need k >= 2")
    dm = dm or distance_matrix(g)
    at = _vertices_at_distance(dm)
    found: dict[tuple[int, ...], KAP] = {}

    def extend(chain: list[int], d: int) -> None:
        if len(chain) == k:
            key = tuple(sorted(chain))
            if key not in found:
                found[key] = KAP(tuple(chain), d)
            return
        for w in at[chain[-1]].get(d, ()):
            if w not in chain:
                chain.append(w)
                extend(chain, d)
                chain.pop()

    for v in range(g.n):
        for d in sorted(at[v]):
            extend([v], d)

    keys = sorted(found)
    incidence: list[list[int]] = [[] for _ in range(g.n)]
    for i, key in enumerate(keys):
        for v in key:
            incidence[v].append(i)
    return APIndex(g.n, k, tuple(keys), tuple(found[key] for key in keys),
                   tuple(tuple(x) for x in incidence))


def is_rainbow(colors: Mapping[int, int] | Sequence[int], ap: KAP | Sequence[int]) -> bool:
    verts = ap.witness if isinstance(ap, KAP) else tuple(ap)
    seen = {colors[v] for v in verts}
    return len(seen) == len(verts)


def find_rainbow_k_ap(idx: APIndex, colors: Sequence[int]) -> KAP | None:
    """First rainbow AP in canonical order, or ``None``."""
    k = idx.k
    for key, ap in zip(idx.aps, idx.witnesses):
        if len({colors[v] for v in key}) == k:
            return ap
    return None

