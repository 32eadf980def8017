import pytest
from hypothesis import given, strategies as st

from antivdw.generators import family_graph
from antivdw.graph_core import distance_profile
from antivdw.ramsey import (EdgeColoredComplete, build_distance_complete,
                            find_monochromatic_path, rainbow_via_bridge)
from conftest import graphs


def test_distance_complete_dump():
    kc = build_distance_complete(family_graph("path:4"), [0, 1, 3])
    assert kc.dump() == "1 3\n2\n"
    with pytest.raises(ValueError, match="duplicate"):
        build_distance_complete(family_graph("path:4"), [0, 0])


def test_monochromatic_path_search():
    kc = EdgeColoredComplete((0, 1, 2), ((0, 1, 2), (1, 0, 1), (2, 1, 0)))
    assert find_monochromatic_path(kc, 3) == [0, 1, 2]
    kc = EdgeColoredComplete((0, 1, 2), ((0, 1, 2), (1, 0, 2), (2, 2, 0)))
    assert find_monochromatic_path(kc, 3) == [0, 2, 1]


def test_bridge_statuses():
    g = family_graph("kbipartite:4,4")
    out = rainbow_via_bridge(g, [1, 2, 3, 4, 5, 5, 5, 5], 4)
    assert out.status == "found" and len(set(out.ap.witness)) == 4
    assert rainbow_via_bridge(family_graph("path:2"), [1, 2], 3).status == "no_k_ap"
    assert rainbow_via_bridge(family_graph("path:4"), [1, 1, 2, 2], 3).status == "not_found"


@given(graphs(nmin=4, nmax=7, connected=True), st.randoms(use_true_random=False))
def test_bridge_finds_rainbow_at_ramsey_number(g, r):
    # diameter 2: R(P_3, P_3) = 3 distinct colours force a rainbow 3-AP
    if distance_profile(g).diameter != 2:
        return
    cols = [r.randint(1, 3) for _ in range(g.n)]
    if len(set(cols)) < 3:
        cols[:3] = [1, 2, 3]
    assert rainbow_via_bridge(g, cols, 3).status == "found"
