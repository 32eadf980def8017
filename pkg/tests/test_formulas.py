import json

import pytest

from antivdw.formulas import (OutOfRange, aw_cyclic_3, aw_interval_3, bound_report, factorize,
                              family_exact, interval_exponent, is_power_of_three,
                              load_prime_table, prime_class, ramsey_paths, write_prime_table)
from antivdw.generators import FamilySpec, cartesian_product, family_graph, generate
from antivdw.graph_core import Graph


# frozen from the solver sweep (paths 3..27)
PATHS = {3: 3, 4: 4, 5: 4, 6: 4, 7: 4, 8: 5, 9: 4, 10: 5, 21: 5, 22: 6, 26: 6, 27: 5}
CYCLES = dict(zip(range(3, 25), [3, 3, 3, 4, 3, 3, 4, 4, 3, 4, 3, 4, 4, 3, 4, 5, 3, 4, 4, 4, 3, 4]))


@pytest.mark.parametrize("n,want", sorted(PATHS.items()))
def test_interval_formula(n, want):
    assert aw_interval_3(n) == want


def test_interval_exponent_edges():
    assert interval_exponent(3) == (1, False)
    assert interval_exponent(8) == (2, True)
    assert interval_exponent(22) == (3, True)
    with pytest.raises(OutOfRange):
        interval_exponent(2)


@pytest.mark.parametrize("n,want", sorted(CYCLES.items()))
def test_cyclic_formula(n, want):
    assert aw_cyclic_3(n) == want


def test_prime_table_shipped():
    table = load_prime_table()
    assert {p for p, a in table.items() if a == 4} == {17, 31, 41, 43}
    assert all(a == 3 for p, a in table.items() if p < 17)
    assert prime_class(17, use_table=False) == 4


def test_prime_table_round_trip(tmp_path):
    path = tmp_path / "t.txt"
    write_prime_table({5: 3, 17: 4}, path)
    assert load_prime_table(path) == {5: 3, 17: 4}
    assert path.read_text().startswith("#")


def test_helpers():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert is_power_of_three(27) and not is_power_of_three(18)
    assert ramsey_paths(4, 4) == 5 and ramsey_paths(5, 5) == 6
    with pytest.raises(OutOfRange):
        ramsey_paths(5, 4)


def test_family_exact():
    assert family_exact(FamilySpec("star", (6,)), 4)[0] == 5
    assert family_exact(FamilySpec("complete_bipartite", (5, 5)), 5)[0] == 6
    assert family_exact(FamilySpec("hypercube", (5,)), 3)[0] == 4
    assert family_exact(FamilySpec("star", (6,)), 3) is None


def test_bound_report_tree():
    rep = bound_report(family_graph("comb:4"), 3)
    assert rep.exact[0] == 4  # odd diameter, no bijacent vertices
    assert rep.consistent() and rep.admits(5) is False
    rep = bound_report(family_graph("path:8"), 3)
    assert rep.exact is None and (rep.best_lower, rep.best_upper) == (4, 5)
    json.loads(rep.to_json())


def test_bound_report_product_and_dominating():
    g, h = family_graph("path:3"), family_graph("cycle:4")
    rep = bound_report(cartesian_product(g, h), 3, product_of=(g, h))
    assert rep.best_upper == 4
    star = family_graph("star:5")
    rep = bound_report(star, 4)
    assert 5 in [v for v, _ in rep.upper]


def test_bound_report_no_ap_and_small_graph():
    k2 = Graph.from_edges(2, [(0, 1)])
    rep = bound_report(k2, 4)
    assert rep.exact[0] == 3 and rep.best_lower is None


def test_bound_report_rejects_disconnected():
    with pytest.raises(ValueError):
        bound_report(generate(FamilySpec("empty", (3,))), 3)
