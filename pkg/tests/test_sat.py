import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquekit import (
    CnfFormula,
    Literal,
    cnf_corpus,
    decide_satisfiable,
    max_clique_size_oracle,
    random_3cnf,
    reduce_3sat,
    truth_table_oracle,
)

# truth-table verdicts for cnf_corpus(20, 8, 8, seed=404), computed once by
# the exhaustive oracle and frozen
CORPUS_SEED = 404
CORPUS_EXPECTED = [
    True, True, True, True, True, True, True, True, True, True,
    True, True, True, True, True, True, True, True, False, True,
]


def _clause(*lits: int):
    return tuple(Literal.from_int(v) for v in lits)


def test_literal_validation():
    with pytest.raises(ValueError):
        Literal(0)
    with pytest.raises(ValueError):
        Literal.from_int(0)
    assert Literal.from_int(-3) == Literal(3, negated=True)


def test_formula_validation():
    with pytest.raises(ValueError, match="need 3"):
        CnfFormula(2, [(Literal(1), Literal(2))])
    with pytest.raises(ValueError, match="above the declared"):
        CnfFormula(1, [_clause(1, 1, 2)])


def test_single_clause_reduction():
    red = reduce_3sat(CnfFormula(3, [_clause(1, 2, 3)]))
    assert red.graph.node_count == 3
    assert red.graph.edge_count == 0
    assert red.clause_count == 1


def test_contradiction_reduction_has_no_cross_edges():
    f = CnfFormula(1, [_clause(1, 1, 1), _clause(-1, -1, -1)])
    red = reduce_3sat(f)
    assert red.graph.node_count == 6
    assert red.graph.edge_count == 0
    assert max_clique_size_oracle(red.graph) == 1


def test_two_clause_reduction_edge_count():
    # all 9 cross pairs minus the complementary (x1, -x1) pair
    f = CnfFormula(3, [_clause(1, 2, 3), _clause(-1, 2, 3)])
    red = reduce_3sat(f)
    assert red.graph.edge_count == 8
    assert max_clique_size_oracle(red.graph) == 2


def test_node_origin_orders_by_clause_then_position():
    f = CnfFormula(2, [_clause(1, -2, 2), _clause(2, 2, 1)])
    red = reduce_3sat(f)
    assert red.node_origin[0] == (0, Literal(1))
    assert red.node_origin[1] == (0, Literal(2, negated=True))
    assert red.node_origin[5] == (1, Literal(1))


@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 10_000))
@settings(max_examples=40)
def test_reduction_is_clause_partite(nv, nc, seed):
    red = reduce_3sat(random_3cnf(nv, nc, seed))
    assert red.graph.node_count == 3 * red.clause_count
    for ci in range(red.clause_count):
        base = 3 * ci
        for a in range(base, base + 3):
            for b in range(a + 1, base + 3):
                assert not red.graph.are_adjacent(a, b)


def test_truth_table_trivial_cases():
    assert truth_table_oracle(CnfFormula(3, [_clause(1, 2, 3)]))
    assert not truth_table_oracle(
        CnfFormula(1, [_clause(1, 1, 1), _clause(-1, -1, -1)])
    )
    assert truth_table_oracle(CnfFormula(0, []))


def test_truth_table_rejects_large_formulas():
    with pytest.raises(ValueError, match="truth-table"):
        truth_table_oracle(CnfFormula(21, []))


def test_decide_trivial_cases():
    assert decide_satisfiable(CnfFormula(3, [_clause(1, 2, 3)]))
    assert not decide_satisfiable(
        CnfFormula(1, [_clause(1, 1, 1), _clause(-1, -1, -1)])
    )
    assert decide_satisfiable(CnfFormula(0, []))


def test_decide_rejects_unknown_solver():
    with pytest.raises(ValueError, match="unknown solver"):
        decide_satisfiable(CnfFormula(3, [_clause(1, 2, 3)]), "dpll")


def test_oracle_solver_caps_reduction_size():
    f = random_3cnf(4, 21, seed=1)  # 63 nodes
    with pytest.raises(ValueError, match="oracle cap"):
        decide_satisfiable(f, "oracle")


@given(st.integers(1, 5), st.integers(1, 8), st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_oracle_decider_matches_truth_table(nv, nc, seed):
    f = random_3cnf(nv, nc, seed)
    assert decide_satisfiable(f, "oracle") == truth_table_oracle(f)


@given(st.integers(1, 5), st.integers(1, 6), st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_merge_solver_yes_answers_are_sound(nv, nc, seed):
    f = random_3cnf(nv, nc, seed)
    if decide_satisfiable(f, "paper"):
        assert decide_satisfiable(f, "oracle")


def test_pinned_corpus_regression():
    formulas = cnf_corpus(20, max_vars=8, max_clauses=8, seed=CORPUS_SEED)
    assert [truth_table_oracle(f) for f in formulas] == CORPUS_EXPECTED
    assert any(not verdict for verdict in CORPUS_EXPECTED)  # mix, not all-SAT


def test_random_3cnf_is_deterministic():
    assert random_3cnf(5, 4, 9).clauses == random_3cnf(5, 4, 9).clauses
    assert random_3cnf(5, 4, 9).clauses != random_3cnf(5, 4, 10).clauses
