import pytest
from hypothesis import given, strategies as st

from antivdw.ap_engine import enumerate_k_aps, find_rainbow_k_ap
from antivdw.generators import FamilySpec, generate
from antivdw.graph_core import Graph
from antivdw.oracles import brute_force_aw, count_rainbow_free
from antivdw.solver import (BudgetExceeded, Coloring, EnumerationTooLarge, SearchStats, aw,
                            aw_disconnected, close_group, enumerate_extremal,
                            enumerate_rainbow_free, exists_rainbow_free_exact)
from conftest import graphs


def fam(kind, *p):
    return generate(FamilySpec(kind, p))


def test_coloring_basics():
    c = Coloring.of([3, 1, 3, 2])
    assert c.r == 3 and c.is_exact
    assert c.canonical().colors == (1, 2, 1, 3)
    assert c.merge(1, 3).colors == (1, 1, 1, 2)
    assert Coloring.from_line(c.to_line()) == c
    assert sorted(map(sorted, c.classes())) == [[0, 2], [1], [3]]


# frozen values, cross-checked against brute_force_aw for the small ones
@pytest.mark.parametrize("n,want", [(3, 3), (4, 4), (7, 4), (8, 5), (9, 4), (10, 5), (27, 5)])
def test_path_values(n, want):
    assert aw(fam("path", n)).aw == want


def test_small_values_agree_with_definition():
    for kind, p, k in [("path", (6,), 3), ("cycle", (6,), 3), ("star", (4,), 4),
                       ("complete", (5,), 4), ("cycle", (5,), 4)]:
        g = fam(kind, *p)
        assert aw(g, k).aw == brute_force_aw(g, k), (kind, p, k)


def test_no_ap_means_n_plus_one():
    res = aw(fam("path", 2), 3)
    assert res.aw == 3 and res.extremal.is_exact


def test_disconnected_sum_rule():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    assert aw(g).aw == 1 + 2 * (3 - 1)
    assert aw_disconnected([3, 3]) == 5
    assert aw(g).aw == brute_force_aw(g, 3)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        aw(fam("cycle", 47), budget=50)


def test_stats_identical_across_threads():
    g = fam("cycle", 23)
    a, b = aw(g, threads=1), aw(g, threads=3)
    assert a.to_dict() == b.to_dict()


def test_exists_rainbow_free_exact_counts_nodes():
    g = fam("path", 8)
    st_ = SearchStats()
    assert exists_rainbow_free_exact(g, enumerate_k_aps(g, 3), 4, stats=st_)
    assert st_.nodes > 0


def test_enumerate_matches_raw_count():
    g = fam("path", 6)
    idx = enumerate_k_aps(g, 3)
    for r in (2, 3):
        classes = enumerate_rainbow_free(idx, r)
        fact = 1 if r == 1 else r * (r - 1)
        assert len(classes) * fact == count_rainbow_free(g, 3, r)


def test_enumeration_limit():
    g = fam("path", 8)
    with pytest.raises(EnumerationTooLarge):
        enumerate_rainbow_free(enumerate_k_aps(g, 3), 3, limit=2)


def test_extremal_q3_unique():
    spec = FamilySpec("hypercube", (3,))
    from antivdw.generators import automorphism_generators
    g = generate(spec)
    rep = enumerate_extremal(g, enumerate_k_aps(g, 3), 3,
                             automorphisms=automorphism_generators(spec))
    assert (rep.raw, rep.color_classes, rep.orbits) == (24, 4, 1)


def test_close_group_size():
    # hypercube Q_3 automorphism group has order 2^3 * 3! = 48
    from antivdw.generators import automorphism_generators
    assert len(close_group(automorphism_generators(FamilySpec("hypercube", (3,))), 8)) == 48


@given(graphs(nmin=2, nmax=5, connected=True), st.sampled_from([3, 4]))
def test_solver_matches_brute_force(g, k):
    res = aw(g, k)
    assert res.aw == brute_force_aw(g, k)
    w = res.extremal
    assert w.is_exact and find_rainbow_k_ap(enumerate_k_aps(g, k), w.colors) is None


@given(graphs(nmin=3, nmax=7, connected=True))
def test_merge_keeps_rainbow_free(g):
    res = aw(g, 3)
    w = res.extremal
    idx = enumerate_k_aps(g, 3)
    for a in range(1, w.r + 1):
        for b in range(a + 1, w.r + 1):
            assert find_rainbow_k_ap(idx, w.merge(a, b).colors) is None


@given(graphs(nmin=3, nmax=7, connected=True), st.randoms(use_true_random=False))
def test_relabel_invariance(g, r):
    perm = list(range(g.n))
    r.shuffle(perm)
    assert aw(g).aw == aw(g.relabel(perm)).aw
