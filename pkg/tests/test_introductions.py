import pytest
from hypothesis import given

from cliquekit import (
    Graph,
    introductions_for,
    mutual_neighbor_view,
    mutual_neighbors,
    run_introductions,
    triangles_oracle,
)

from conftest import A, B, C, D, E, F
from strategies import small_graphs

# the six per-node triangle tables of the first walkthrough fixture
FIG3A_TABLES = {
    A: {(A, B, C), (A, B, D), (A, C, D)},
    B: {(A, B, C), (A, B, D), (B, C, D)},
    C: {(A, B, C), (A, C, D), (B, C, D), (C, E, F)},
    D: {(A, B, D), (A, C, D), (B, C, D)},
    E: {(C, E, F)},
    F: {(C, E, F)},
}


def test_mutual_neighbors_fig3a(fig3a):
    g, _ = fig3a
    assert mutual_neighbors(g, A, C) == {B, D}
    assert mutual_neighbors(g, E, C) == {F}


def test_mutual_neighbors_of_lone_edge():
    g = Graph()
    g.add_node()
    g.add_node()
    g.connect(0, 1)
    assert mutual_neighbors(g, 0, 1) == set()


def test_mutual_neighbors_rejects_same_node(fig3a):
    g, _ = fig3a
    with pytest.raises(ValueError):
        mutual_neighbors(g, A, A)


def test_mutual_neighbor_view_rows(fig3a):
    g, _ = fig3a
    view = mutual_neighbor_view(g, A)
    assert view.mutual == {B: {C, D}, C: {B, D}, D: {B, C}}
    view_c = mutual_neighbor_view(g, C)
    assert view_c.mutual == {A: {B, D}, B: {A, D}, D: {A, B}, E: {F}, F: {E}}


def test_introductions_for_node_a(fig3a):
    g, _ = fig3a
    table, twos = introductions_for(g, A)
    assert table.triangles == FIG3A_TABLES[A]
    assert twos == []


def test_introductions_for_node_c(fig3a):
    g, _ = fig3a
    table, _ = introductions_for(g, C)
    assert table.triangles == FIG3A_TABLES[C]


def test_lone_edge_yields_two_clique():
    g = Graph()
    g.add_node()
    g.add_node()
    g.connect(0, 1)
    table, twos = introductions_for(g, 0)
    assert table.triangles == set()
    assert twos == [(0, 1)]


def test_run_introductions_matches_all_fig3a_rows(fig3a):
    g, _ = fig3a
    tables, early = run_introductions(g)
    assert {v: t.triangles for v, t in tables.items()} == FIG3A_TABLES
    assert early == set()


def test_k4_tables():
    g = Graph()
    g.new_complete_subgraph(4)
    tables, _ = run_introductions(g)
    assert all(len(t.triangles) == 3 for t in tables.values())


def test_isolated_node_and_edge_early_cliques():
    g = Graph()
    g.add_node()  # isolated
    u, v = g.add_node(), g.add_node()
    g.connect(u, v)
    _, early = run_introductions(g)
    assert early == {(0,), (u, v)}
    _, early_off = run_introductions(g, include_singletons=False)
    assert early_off == {(u, v)}


@given(small_graphs(max_nodes=12))
def test_tables_match_triangle_oracle(g):
    tables, _ = run_introductions(g)
    for v in g.nodes():
        assert tables[v].triangles == triangles_oracle(g, v)


@given(small_graphs(max_nodes=10))
def test_triangle_symmetry(g):
    tables, _ = run_introductions(g)
    for v in g.nodes():
        for tri in tables[v].triangles:
            for member in tri:
                assert tri in tables[member].triangles


@given(small_graphs(max_nodes=10))
def test_two_clique_rule(g):
    for v in g.nodes():
        _, twos = introductions_for(g, v)
        expected = {
            tuple(sorted((v, n)))
            for n in g.neighbors(v)
            if not mutual_neighbors(g, v, n)
        }
        assert set(twos) == expected


@given(small_graphs(max_nodes=10))
def test_table_size_counts_neighborhood_edges(g):
    tables, _ = run_introductions(g)
    for v in g.nodes():
        adj = g.neighbors(v)
        inside = sum(
            1 for a in adj for b in adj if a < b and g.are_adjacent(a, b)
        )
        assert len(tables[v].triangles) == inside
