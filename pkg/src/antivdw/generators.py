"""Graph families with fixed labelings, Cartesian products and small corpora.

Labelings:

* path / cycle: consecutive integers along the path or cycle;
* star ``K_{1,n}``: centre 0, leaves ``1..n``;
* ``K_{m,n}``: side X is ``0..m-1``, side Y is ``m..m+n-1``;
* hypercube ``Q_n``: vertex ``i`` is the bit string of ``i`` (so distance is
  the Hamming distance ``popcount(i ^ j)``);
* complete binary tree ``B_h``: heap order, children of ``i`` are ``2i+1``
  and ``2i+2``;
* comb with spine ``s``: spine ``0..s-1``, pendant of spine vertex ``i`` is
  ``s+i``;
* broken comb: spine ``0..s-1``, pendants of the spine vertices selected by
  the mask numbered ``s, s+1, ..`` in spine order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .graph_core import Graph, is_connected

KINDS = ("path", "cycle", "complete", "empty", "star", "complete_bipartite",
         "hypercube", "complete_binary_tree", "comb", "broken_comb")

#: CLI shorthand aliases
ALIASES = {"kbipartite": "complete_bipartite", "bipartite": "complete_bipartite",
           "binary_tree": "complete_binary_tree", "btree": "complete_binary_tree",
           "kn": "complete", "qn": "hypercube"}

CORPUS_LIMIT = 7


class FamilyError(ValueError):
    """Invalid family parameters."""


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FamilyError(f"invalid family parameters: unknown kind {self.kind!r}")

    def __str__(self) -> str:
        return f"{self.kind}:" + ",".join(map(str, self.params))


def _need(cond: bool, what: str) -> None:
    if not cond:
        raise FamilyError(f"invalid family parameters: {what}")


def generate(spec: FamilySpec) -> Graph:
    kind, p = spec.kind, spec.params
    name = str(spec)
    if kind == "broken_comb":
        _need(len(p) == 2, "broken_comb takes spine length and leaf mask")
    elif kind == "complete_bipartite":
        _need(len(p) == 2, "complete_bipartite takes m,n")
    else:
        _need(len(p) == 1, f"{kind} takes one parameter")

    if kind == "path":
        n, = p
        _need(n >= 1, "path needs n >= 1")
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), name)
    if kind == "cycle":
        n, = p
        _need(n >= 3, "cycle needs n >= 3")
        return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), name)
    if kind == "complete":
        n, = p
        _need(n >= 1, "complete needs n >= 1")
        return Graph.from_edges(n, itertools.combinations(range(n), 2), name)
    if kind == "empty":
        n, = p
        _need(n >= 0, "empty needs n >= 0")
        return Graph.from_edges(n, (), name)
    if kind == "star":
        n, = p
        _need(n >= 1, "star needs n >= 1 leaves")
        return Graph.from_edges(n + 1, ((0, i) for i in range(1, n + 1)), name)
    if kind == "complete_bipartite":
        m, n = p
        _need(m >= 1 and n >= 1, "complete_bipartite needs m,n >= 1")
        return Graph.from_edges(m + n, ((i, m + j) for i in range(m) for j in range(n)), name)
    if kind == "hypercube":
        n, = p
        _need(n >= 1, "hypercube needs n >= 1")
        return Graph.from_edges(1 << n, ((i, i | 1 << b) for i in range(1 << n)
                                         for b in range(n) if not i >> b & 1), name)
    if kind == "complete_binary_tree":
        h, = p
        _need(h >= 0, "complete_binary_tree needs height >= 0")
        size = (1 << (h + 1)) - 1
        return Graph.from_edges(size, ((i, (i - 1) // 2) for i in range(1, size)), name)
    if kind == "comb":
        s, = p
        _need(s >= 1, "comb needs spine >= 1")
        return Graph.from_edges(2 * s, [(i, i + 1) for i in range(s - 1)]
                                + [(i, s + i) for i in range(s)], name)
    # broken_comb
    s, mask = p
    _need(s >= 1, "broken_comb needs spine >= 1")
    _need(0 <= mask < 1 << s, "broken_comb mask must select spine vertices")
    edges = [(i, i + 1) for i in range(s - 1)]
    nxt = s
    for i in range(s):
        if mask >> i & 1:
            edges.append((i, nxt))
            nxt += 1
    g = Graph.from_edges(nxt, edges, name)
    from .trees import broken_comb_check

    _need(broken_comb_check(g) is not None,
          "broken_comb mask must leave a unique diameter-realizing pair of leaves")
    return g


def cartesian_product(g: Graph, h: Graph, name: str | None = None) -> Graph:
    """``g □ h`` with vertex ``(u, i)`` labelled ``u + i * g.n``.

    Block ``i`` (labels ``i*g.n .. (i+1)*g.n - 1``) is the copy of ``g`` over
    vertex ``i`` of ``h``.
    """
    if g.n == 0 or h.n == 0:
        raise FamilyError("invalid family parameters: product factors must be nonempty")
    n = g.n
    edges = [(u + i * n, x + i * n) for i in range(h.n) for u, x in g.edges()]
    edges += [(u + i * n, u + j * n) for i, j in h.edges() for u in range(n)]
    label = name if name is not None else f"product:({g.name})x({h.name})"
    return Graph.from_edges(n * h.n, edges, label)


def all_graphs_up_to(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Every labelled simple graph on exactly ``n`` vertices.

    Graphs come in increasing order of their edge mask, where bit ``t`` is
    the ``t``-th pair of ``itertools.combinations(range(n), 2)``.
    """
    if n > CORPUS_LIMIT:
        raise FamilyError(f"corpus too large: n={n} exceeds {CORPUS_LIMIT}")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, (e for t, e in enumerate(pairs) if mask >> t & 1),
                             f"labeled:{n}:{mask}")
        if not connected_only or is_connected(g):
            yield g


def corpus(nmax: int, connected_only: bool = False, nmin: int = 1) -> Iterator[Graph]:
    for n in range(nmin, nmax + 1):
        yield from all_graphs_up_to(n, connected_only)


def add_apex(g: Graph) -> Graph:
    """Join a new vertex ``g.n`` to every vertex of ``g``."""
    return Graph.from_edges(g.n + 1, g.edges() + [(v, g.n) for v in range(g.n)],
                            f"apex({g.name})")


def nonisomorphic_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices."""
    import networkx as nx

    if n == 1:
        yield Graph(1, ((),), "tree:1:0")
        return
    for t, tree in enumerate(nx.nonisomorphic_trees(n)):
        yield Graph.from_edges(n, tree.edges(), f"tree:{n}:{t}")


def nonisomorphic_graphs(nmax: int, connected_only: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class on ``1..nmax <= 7`` vertices."""
    import networkx as nx

    if nmax > CORPUS_LIMIT:
        raise FamilyError(f"corpus too large: n={nmax} exceeds {CORPUS_LIMIT}")
    for t, a in enumerate(nx.graph_atlas_g()):
        if 1 <= a.number_of_nodes() <= nmax:
            g = Graph.from_edges(a.number_of_nodes(), a.edges(), f"atlas:{t}")
            if not connected_only or is_connected(g):
                yield g


def random_tree(n: int, rng) -> Graph:
    """Uniform labelled tree on ``n`` vertices by decoding a random Prüfer sequence."""
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [], f"prufer:{n}")
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_edges(n, _decode_prufer(seq, n), f"prufer:{n}:{','.join(map(str, seq))}")


def _decode_prufer(seq: list[int], n: int) -> list[tuple[int, int]]:
    import heapq

    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


# --------------------------------------------------------------------------
# automorphism generators for the families that know their symmetries


def automorphism_generators(spec: FamilySpec) -> list[tuple[int, ...]]:
    """Generators of a subgroup of Aut for the family (the full group for
    paths, cycles, complete graphs, stars and hypercubes)."""
    kind, p = spec.kind, spec.params
    if kind == "path":
        n, = p
        return [tuple(range(n - 1, -1, -1))]
    if kind == "cycle":
        n, = p
        return [tuple((i + 1) % n for i in range(n)), tuple((-i) % n for i in range(n))]
    if kind in ("complete", "empty"):
        n, = p
        return _symmetric_generators(list(range(n)), n)
    if kind == "star":
        n, = p
        return _symmetric_generators(list(range(1, n + 1)), n + 1)
    if kind == "hypercube":
        n, = p
        size = 1 << n
        gens = [tuple(i ^ 1 for i in range(size))]
        for b in range(n - 1):
            gens.append(tuple(_swap_bits(i, b, b + 1) for i in range(size)))
        return gens
    if kind == "complete_bipartite":
        m, n = p
        gens = _symmetric_generators(list(range(m)), m + n)
        gens += _symmetric_generators(list(range(m, m + n)), m + n)
        if m == n:
            gens.append(tuple((i + m) % (2 * m) for i in range(2 * m)))
        return gens
    return []


def _symmetric_generators(points: list[int], size: int) -> list[tuple[int, ...]]:
    gens = []
    for a, b in zip(points, points[1:]):
        perm = list(range(size))
        perm[a], perm[b] = b, a
        gens.append(tuple(perm))
    return gens


def _swap_bits(i: int, a: int, b: int) -> int:
    if (i >> a & 1) != (i >> b & 1):
        i ^= (1 << a) | (1 << b)
    return i


# --------------------------------------------------------------------------
# CLI shorthand: "path:9", "kbipartite:5,5", "product:(path:3)x(cycle:4)"


def _split_product(body: str) -> tuple[str, str]:
    """Split ``(A)x(B)`` at the top-level ``x``."""
    depth = 0
    for pos, ch in enumerate(body):
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            break
        if depth == 0 and ch == ")" and body[pos + 1:pos + 3] == "x(" and body.endswith(")"):
            if body.startswith("("):
                return body[1:pos], body[pos + 3:-1]
    raise FamilyError(f"invalid family parameters: malformed product {body!r}")


def parse_family(text: str) -> FamilySpec | tuple:
    """Parse CLI shorthand into a :class:`FamilySpec` or a nested
    ``("product", left, right)`` tuple."""
    text = text.strip()
    if text.startswith("product:"):
        left, right = _split_product(text[len("product:"):])
        return ("product", parse_family(left), parse_family(right))
    kind, _, args = text.partition(":")
    kind = ALIASES.get(kind.strip().lower(), kind.strip().lower())
    try:
        params = tuple(int(x) for x in args.split(",") if x.strip())
    except ValueError:
        raise FamilyError(f"invalid family parameters: cannot parse {text!r}") from None
    return FamilySpec(kind, params)


def family_graph(text: str | FamilySpec | tuple) -> Graph:
    """Build a graph from CLI shorthand (or an already parsed spec)."""
    spec = parse_family(text) if isinstance(text, str) else text
    if isinstance(spec, FamilySpec):
        return generate(spec)
    _, left, right = spec
    g = cartesian_product(family_graph(left), family_graph(right))
    return g if not isinstance(text, str) else Graph(g.n, g.adjacency, text.strip())
