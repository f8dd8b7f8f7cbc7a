"""DIMACS edge and CNF text formats.

Real benchmark corpora are messy: duplicate edge lines are tolerated
(connect is idempotent) and count mismatches in the header produce warning
diagnostics instead of failures, unless strict mode is on. All diagnostics
and errors carry 1-based line numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .sat import CnfFormula, Literal


@dataclass
class ParseDiagnostic:
    line: int
    message: str


class DimacsError(ValueError):
    """Fatal parse problem at a specific input line."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def _warn(
    diagnostics: list[ParseDiagnostic] | None,
    strict: bool,
    line: int,
    message: str,
) -> None:
    if strict:
        raise DimacsError(line, message)
    if diagnostics is not None:
        diagnostics.append(ParseDiagnostic(line=line, message=message))


def parse_dimacs_edge(
    text: str,
    *,
    strict: bool = False,
    diagnostics: list[ParseDiagnostic] | None = None,
) -> Graph:
    """Parse the DIMACS edge format: ``c`` comments, ``p edge n m``, ``e u v``.

    Vertex indices are 1-based in the file and become ids 0..n-1. Warnings
    (header/edge-count mismatch) go to ``diagnostics`` when provided, or
    raise in strict mode.
    """
    g: Graph | None = None
    declared_m = 0
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if g is not None:
                raise DimacsError(lineno, "duplicate 'p' header")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise DimacsError(lineno, f"malformed header {line!r}")
            try:
                n, declared_m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise DimacsError(lineno, f"non-integer header counts in {line!r}")
            if n < 0 or declared_m < 0:
                raise DimacsError(lineno, "header counts cannot be negative")
            g = Graph()
            for _ in range(n):
                g.add_node()
            header_line = lineno
        elif tokens[0] == "e":
            if g is None:
                raise DimacsError(lineno, "edge line before 'p edge' header")
            if len(tokens) != 3:
                raise DimacsError(lineno, f"malformed edge line {line!r}")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise DimacsError(lineno, f"non-integer vertex in {line!r}")
            if not 1 <= u <= g.node_count or not 1 <= v <= g.node_count:
                raise DimacsError(
                    lineno, f"vertex out of range 1..{g.node_count} in {line!r}"
                )
            if u == v:
                raise DimacsError(lineno, f"self-loop edge {u} {v}")
            g.connect(u - 1, v - 1)
        else:
            raise DimacsError(lineno, f"unrecognized line {line!r}")
    if g is None:
        raise DimacsError(1, "missing 'p edge' header")
    if g.edge_count != declared_m:
        _warn(
            diagnostics,
            strict,
            header_line,
            f"header declares {declared_m} edges but {g.edge_count} distinct "
            "edges were read",
        )
    return g


def write_dimacs_edge(g: Graph) -> str:
    """Canonical DIMACS edge text: ascending edges, single spaces, one
    trailing newline per line."""
    lines = [f"p edge {g.node_count} {g.edge_count}"]
    lines.extend(f"e {a + 1} {b + 1}" for a, b in g.edges())
    return "\n".join(lines) + "\n"


def parse_dimacs_cnf(
    text: str,
    *,
    strict: bool = False,
    diagnostics: list[ParseDiagnostic] | None = None,
) -> CnfFormula:
    """Parse DIMACS CNF restricted to exactly three literals per clause."""
    variable_count: int | None = None
    declared_clauses = 0
    header_line = 0
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if variable_count is not None:
                raise DimacsError(lineno, "duplicate 'p' header")
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise DimacsError(lineno, f"malformed header {line!r}")
            try:
                variable_count, declared_clauses = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise DimacsError(lineno, f"non-integer header counts in {line!r}")
            if variable_count < 0 or declared_clauses < 0:
                raise DimacsError(lineno, "header counts cannot be negative")
            header_line = lineno
            continue
        if variable_count is None:
            raise DimacsError(lineno, "clause line before 'p cnf' header")
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise DimacsError(lineno, f"non-integer literal in {line!r}")
        if not values or values[-1] != 0:
            raise DimacsError(lineno, "clause line missing terminating 0")
        lits = values[:-1]
        if any(v == 0 for v in lits):
            raise DimacsError(lineno, "literal 0 before the clause terminator")
        if len(lits) != 3:
            raise DimacsError(
                lineno, f"clause has {len(lits)} literals; exactly 3 required"
            )
        if any(abs(v) > variable_count for v in lits):
            raise DimacsError(
                lineno, f"literal variable above the declared {variable_count}"
            )
        clauses.append(tuple(Literal.from_int(v) for v in lits))
    if variable_count is None:
        raise DimacsError(1, "missing 'p cnf' header")
    if len(clauses) != declared_clauses:
        _warn(
            diagnostics,
            strict,
            header_line,
            f"header declares {declared_clauses} clauses but {len(clauses)} "
            "were read",
        )
    return CnfFormula(variable_count=variable_count, clauses=clauses)
