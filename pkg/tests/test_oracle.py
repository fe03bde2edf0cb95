import pytest

from isop.counterexample import counterexample_spec
from isop.lattice import canonical, induced_edge_count, is_connected
from isop.oracle import (
    Budget,
    BudgetExceeded,
    enumerate_connected_sets,
    max_induced_edges,
    max_induced_edges_table,
    naive_connected_classes,
    partition_max,
    windowed_unrestricted_max,
)
from isop.trilattice import TRI_SPEC, e_of_n

G2 = counterexample_spec(2)
HEXAGON = frozenset([(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (-1, 1), (1, -1)])


def test_class_counts():
    assert sum(1 for _ in enumerate_connected_sets(TRI_SPEC, 1)) == 1
    assert sum(1 for _ in enumerate_connected_sets(TRI_SPEC, 2)) == 6
    assert {frozenset(s) for s in enumerate_connected_sets(G2, 2)} == {
        frozenset({(0, 0), (1, 0)}), frozenset({(0, 0), (0, 1)}), frozenset({(0, 0), (2, 0)})
    }


@pytest.mark.parametrize("g,n_max", [(TRI_SPEC, 4), (G2, 3)])
def test_enumeration_matches_naive(g, n_max):
    for n in range(1, n_max + 1):
        got = list(enumerate_connected_sets(g, n))
        assert len(got) == len(set(got))
        assert all(min(s) == (0,) * g.dimension and is_connected(s, g) for s in got)
        assert set(got) == naive_connected_classes(g, n)


def test_enumeration_deterministic():
    assert list(enumerate_connected_sets(TRI_SPEC, 4)) == list(enumerate_connected_sets(TRI_SPEC, 4))


@pytest.mark.parametrize("g", [TRI_SPEC, G2])
def test_pruned_equals_unpruned(g):
    pruned = max_induced_edges_table(g, 6)
    plain = max_induced_edges_table(g, 6, prune=False)
    for a, b in zip(pruned, plain):
        assert a.best_edges == b.best_edges
        assert a.witnesses == b.witnesses
        assert a.sets_explored <= b.sets_explored


def test_unpruned_counts_all_sets():
    plain = max_induced_edges_table(TRI_SPEC, 4, prune=False)
    # Search nodes are the connected sets of each size up to n.
    sizes = [sum(1 for _ in enumerate_connected_sets(TRI_SPEC, m)) for m in range(1, 5)]
    assert plain[-1].sets_explored == sum(sizes)


@pytest.mark.parametrize("g", [TRI_SPEC, G2])
def test_connected_optimum_is_global(g):
    best = [0] + [r.best_edges for r in max_induced_edges_table(g, 6)]
    for n in range(1, 7):
        assert partition_max(best, n) == best[n]
        assert windowed_unrestricted_max(g, n, 2 if n <= 5 else 1) <= best[n]
    for n in range(1, 6):
        assert windowed_unrestricted_max(g, n, 2) == best[n]


@pytest.mark.parametrize("n,e", [(3, 3), (7, 18), (10, 30)])
def test_known_optima(n, e):
    res = max_induced_edges(TRI_SPEC, n)
    assert res.best_edges == e == e_of_n(n)
    assert res.best_boundary == 12 * n - 2 * e
    assert all(induced_edge_count(w, TRI_SPEC) == e for w in res.witnesses)


def test_unique_at_seven():
    res = max_induced_edges(TRI_SPEC, 7)
    assert len(res.witnesses) == 1
    assert frozenset(res.witnesses[0]) == canonical(HEXAGON)


def test_budget():
    with pytest.raises(BudgetExceeded) as info:
        max_induced_edges(TRI_SPEC, 9, Budget(max_sets=500))
    assert info.value.sets_explored > 0
    assert info.value.best_lower_bound >= 0


def test_thread_count_does_not_change_result():
    assert max_induced_edges(TRI_SPEC, 9, threads=3).to_json() == max_induced_edges(TRI_SPEC, 9).to_json()
