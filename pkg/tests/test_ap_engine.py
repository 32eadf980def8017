import pytest
from hypothesis import given, strategies as st

from antivdw.ap_engine import KAP, enumerate_k_aps, find_rainbow_k_ap, is_rainbow
from antivdw.generators import FamilySpec, generate
from antivdw.graph_core import distance_matrix
from antivdw.oracles import naive_k_aps
from conftest import graphs


def test_path5_three_aps_frozen():
    idx = enumerate_k_aps(generate(FamilySpec("path", (5,))), 3)
    # oracle: 3 with d=1, 1 with d=2, plus 0-? none for d>=3
    assert [a.witness for a in idx] == [(0, 1, 2), (0, 2, 4), (1, 2, 3), (2, 3, 4)]
    assert idx.dump().splitlines()[1] == "d=2: 0 2 4"


def test_endpoints_distance_unconstrained():
    # K_{1,3}: leaf-centre-leaf has d(v1,v3) = 2, and leaf triples are 2-APs
    g = generate(FamilySpec("star", (3,)))
    sets = {a.vertex_set for a in enumerate_k_aps(g, 3)}
    assert frozenset({1, 0, 2}) in sets and frozenset({1, 2, 3}) in sets
    assert len(sets) == 4
    # C_4 has exactly its four 2-edge paths; d=2 would revisit a vertex
    c4 = generate(FamilySpec("cycle", (4,)))
    assert len(enumerate_k_aps(c4, 3)) == 4


def test_no_ap_in_disconnected_pairs():
    g = generate(FamilySpec("empty", (4,)))
    assert len(enumerate_k_aps(g, 3)) == 0


def test_k_validation():
    with pytest.raises(ValueError, match="k out of range"):
        enumerate_k_aps(generate(FamilySpec("path", (3,))), 1)


def test_rainbow_helpers():
    ap = KAP((0, 1, 2), 1)
    assert is_rainbow([1, 2, 3], ap)
    assert not is_rainbow([1, 2, 1], ap)
    idx = enumerate_k_aps(generate(FamilySpec("path", (3,))), 3)
    assert find_rainbow_k_ap(idx, [1, 1, 2]) is None
    assert find_rainbow_k_ap(idx, [3, 1, 2]).witness == (0, 1, 2)


@given(graphs(nmax=6), st.integers(2, 5))
def test_enumeration_matches_oracle(g, k):
    fast = {a.vertex_set for a in enumerate_k_aps(g, k)}
    assert fast == naive_k_aps(g, k)


@given(graphs(nmax=6, connected=True), st.integers(2, 4))
def test_every_witness_is_valid(g, k):
    dm = distance_matrix(g)
    for a in enumerate_k_aps(g, k, dm):
        assert a.is_valid(dm) and a.k == k and len(a.vertex_set) == k
