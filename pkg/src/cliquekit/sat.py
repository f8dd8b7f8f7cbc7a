"""3-CNF formulas, the clause-literal clique reduction, and SAT deciders.

The reduction builds one node per literal occurrence (three per clause) and
connects occurrences from distinct clauses unless they are complementary
literals of the same variable. The formula is satisfiable iff the resulting
graph has a clique of one node per clause.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .calc import CalcOptions, has_clique_of_size
from .generators import prng_stream
from .graph import Graph
from .oracles import max_clique_size_oracle

# one node per literal of 20 clauses = 60 nodes, the enumeration comfort zone
ORACLE_SOLVER_MAX_NODES = 60
TRUTH_TABLE_MAX_VARS = 20

SOLVER_PAPER = "paper"
SOLVER_ORACLE = "oracle"


@dataclass(frozen=True)
class Literal:
    variable: int
    negated: bool = False

    def __post_init__(self) -> None:
        if self.variable < 1:
            raise ValueError("variable indices start at 1")

    def complements(self, other: Literal) -> bool:
        return self.variable == other.variable and self.negated != other.negated

    @staticmethod
    def from_int(lit: int) -> Literal:
        if lit == 0:
            raise ValueError("literal 0 is the clause terminator, not a literal")
        return Literal(variable=abs(lit), negated=lit < 0)

    def __str__(self) -> str:
        return f"-x{self.variable}" if self.negated else f"x{self.variable}"


Clause3 = tuple[Literal, Literal, Literal]


@dataclass
class CnfFormula:
    """A 3-CNF formula: every clause has exactly three literals."""

    variable_count: int
    clauses: list[Clause3] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.variable_count < 0:
            raise ValueError("variable count cannot be negative")
        for i, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise ValueError(f"clause {i} has {len(clause)} literals, need 3")
            for lit in clause:
                if lit.variable > self.variable_count:
                    raise ValueError(
                        f"clause {i} uses x{lit.variable} above the declared "
                        f"{self.variable_count} variables"
                    )


@dataclass
class ReductionResult:
    graph: Graph
    node_origin: dict[int, tuple[int, Literal]]
    clause_count: int


def reduce_3sat(formula: CnfFormula) -> ReductionResult:
    """Build the clause-literal graph for a 3-CNF formula.

    Node ids run in clause-then-position order; there are never edges inside
    a clause triple, so any clique picks at most one node per clause.
    """
    g = Graph()
    origin: dict[int, tuple[int, Literal]] = {}
    for ci, clause in enumerate(formula.clauses):
        for lit in clause:
            origin[g.add_node()] = (ci, lit)
    m = len(formula.clauses)
    for ci in range(m):
        for cj in range(ci + 1, m):
            for a in range(3 * ci, 3 * ci + 3):
                for b in range(3 * cj, 3 * cj + 3):
                    if not origin[a][1].complements(origin[b][1]):
                        g.connect(a, b)
    return ReductionResult(graph=g, node_origin=origin, clause_count=m)


def truth_table_oracle(formula: CnfFormula) -> bool:
    """Exhaustive assignment check; formulas with no clauses are satisfiable."""
    v = formula.variable_count
    if v > TRUTH_TABLE_MAX_VARS:
        raise ValueError(
            f"{v} variables is above the {TRUTH_TABLE_MAX_VARS}-variable "
            "truth-table limit"
        )
    for assignment in range(1 << v):
        ok = True
        for clause in formula.clauses:
            if not any(
                bool(assignment >> (lit.variable - 1) & 1) != lit.negated
                for lit in clause
            ):
                ok = False
                break
        if ok:
            return True
    return False


def decide_satisfiable(formula: CnfFormula, solver: str = SOLVER_ORACLE) -> bool:
    """Decide satisfiability through the clique reduction.

    ``oracle`` answers exactly via Bron-Kerbosch on the reduction graph.
    ``paper`` asks the merge algorithm for a clique of one node per clause;
    YES answers carry a verified witness, NO answers are not certified.
    """
    m = len(formula.clauses)
    if m == 0:
        return True
    reduction = reduce_3sat(formula)
    if solver == SOLVER_ORACLE:
        if reduction.graph.node_count > ORACLE_SOLVER_MAX_NODES:
            raise ValueError(
                f"reduction graph has {reduction.graph.node_count} nodes, above "
                f"the {ORACLE_SOLVER_MAX_NODES}-node oracle cap"
            )
        return max_clique_size_oracle(reduction.graph) == m
    if solver == SOLVER_PAPER:
        found, _witness = has_clique_of_size(reduction.graph, m, CalcOptions())
        return found
    raise ValueError(f"unknown solver {solver!r}; expected 'paper' or 'oracle'")


def random_3cnf(variable_count: int, clause_count: int, seed: int) -> CnfFormula:
    """A seeded random 3-CNF; duplicate variables inside a clause allowed."""
    if variable_count < 1:
        raise ValueError("need at least one variable")
    stream = prng_stream(seed)
    clauses: list[Clause3] = []
    for _ in range(clause_count):
        lits = tuple(
            Literal(variable=1 + next(stream) % variable_count, negated=bool(next(stream) & 1))
            for _ in range(3)
        )
        clauses.append(lits)  # type: ignore[arg-type]
    return CnfFormula(variable_count=variable_count, clauses=clauses)


def cnf_corpus(
    count: int, max_vars: int = 8, max_clauses: int = 8, seed: int = 0
) -> list[CnfFormula]:
    """A deterministic batch of small 3-CNF formulas.

    Variable counts skew low so the batch contains unsatisfiable instances,
    not just the easy satisfiable bulk of sparse random 3-CNF.
    """
    stream = prng_stream(seed)
    formulas = []
    for _ in range(count):
        nv = 1 + next(stream) % max_vars
        nc = 1 + next(stream) % max_clauses
        formulas.append(random_3cnf(nv, nc, next(stream)))
    return formulas
