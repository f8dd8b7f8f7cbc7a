import pytest
from hypothesis import given

from cliquekit import (
    DimacsError,
    GeneratorSpec,
    Graph,
    Literal,
    generate,
    parse_dimacs_cnf,
    parse_dimacs_edge,
    write_dimacs_edge,
)

from strategies import small_graphs


def test_parse_triangle():
    g = parse_dimacs_edge("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g.node_count == 3
    assert g.edge_count == 3
    assert g.are_adjacent(0, 2)


def test_parse_tolerates_comments_and_blank_lines():
    text = "c a triangle\n\np edge 3 3\nc mid comment\ne 1 2\ne 2 3\ne 1 3\n"
    assert parse_dimacs_edge(text).edge_count == 3


def test_write_k3_is_byte_exact():
    g = Graph()
    g.new_complete_subgraph(3)
    assert write_dimacs_edge(g) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"


def test_write_empty_graph():
    assert write_dimacs_edge(Graph()) == "p edge 0 0\n"


def test_fig3a_round_trip(fig3a):
    g, _ = fig3a
    parsed = parse_dimacs_edge(write_dimacs_edge(g))
    assert parsed.node_count == g.node_count
    assert parsed.edges() == g.edges()


def test_parse_errors_carry_line_numbers():
    with pytest.raises(DimacsError) as err:
        parse_dimacs_edge("p edge 2 1\ne 1 1\n")
    assert err.value.line == 2
    with pytest.raises(DimacsError, match="self-loop"):
        parse_dimacs_edge("p edge 2 1\ne 1 1\n")


def test_parse_rejects_missing_header():
    with pytest.raises(DimacsError, match="header"):
        parse_dimacs_edge("e 1 2\n")
    with pytest.raises(DimacsError, match="header"):
        parse_dimacs_edge("c nothing else\n")


def test_parse_rejects_out_of_range_vertex():
    with pytest.raises(DimacsError, match="out of range"):
        parse_dimacs_edge("p edge 3 1\ne 1 4\n")


def test_parse_rejects_malformed_lines():
    with pytest.raises(DimacsError):
        parse_dimacs_edge("p edge 2 1\ne 1\n")
    with pytest.raises(DimacsError):
        parse_dimacs_edge("p edge 2 1\nx 1 2\n")
    with pytest.raises(DimacsError):
        parse_dimacs_edge("p graph 2 1\ne 1 2\n")


def test_duplicate_edges_tolerated_with_warning():
    diags = []
    g = parse_dimacs_edge(
        "p edge 2 2\ne 1 2\ne 2 1\n", diagnostics=diags
    )
    assert g.edge_count == 1
    assert len(diags) == 1
    assert diags[0].line == 1
    assert "declares 2" in diags[0].message


def test_strict_mode_promotes_warning():
    with pytest.raises(DimacsError):
        parse_dimacs_edge("p edge 2 2\ne 1 2\n", strict=True)


@given(small_graphs(max_nodes=12))
def test_round_trip_identity(g):
    parsed = parse_dimacs_edge(write_dimacs_edge(g))
    assert parsed.node_count == g.node_count
    assert parsed.edges() == g.edges()


def test_round_trip_fifty_seeded_graphs():
    for i in range(50):
        g, _ = generate(GeneratorSpec(kind="gnp", n=4 + i % 12, p=0.4, seed=i))
        parsed = parse_dimacs_edge(write_dimacs_edge(g))
        assert parsed.edges() == g.edges()
        assert parsed.node_count == g.node_count


# --- CNF ---


def test_parse_cnf_single_clause():
    f = parse_dimacs_cnf("p cnf 3 1\n1 2 3 0\n")
    assert f.variable_count == 3
    assert f.clauses == [(Literal(1), Literal(2), Literal(3))]


def test_parse_cnf_complementary_pair():
    f = parse_dimacs_cnf("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")
    assert len(f.clauses) == 2
    assert f.clauses[0][0].complements(f.clauses[1][0])


def test_parse_cnf_rejects_wrong_arity():
    with pytest.raises(DimacsError, match="exactly 3"):
        parse_dimacs_cnf("p cnf 2 1\n1 2 0\n")


def test_parse_cnf_rejects_out_of_range_variable():
    with pytest.raises(DimacsError, match="above the declared"):
        parse_dimacs_cnf("p cnf 2 1\n1 2 3 0\n")


def test_parse_cnf_rejects_missing_terminator():
    with pytest.raises(DimacsError, match="terminating 0"):
        parse_dimacs_cnf("p cnf 3 1\n1 2 3\n")


def test_parse_cnf_rejects_clause_before_header():
    with pytest.raises(DimacsError):
        parse_dimacs_cnf("1 2 3 0\n")


def test_parse_cnf_clause_count_warning():
    diags = []
    parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n", diagnostics=diags)
    assert len(diags) == 1 and diags[0].line == 1
