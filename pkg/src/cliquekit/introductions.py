"""Introduction phase: every node learns its neighbors' neighbors.

Each node v intersects its own adjacency with each neighbor's adjacency.
Every mutual neighbor m yields the triangle {v, n, m}; a neighbor sharing no
mutual neighbor at all witnesses a maximal 2-clique {v, n}. The literal
per-message advertisement loop collapses to these set intersections without
changing the output, but operation counters still reflect the message count
(degree * (degree - 1) advertisements per node).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .graph import Clique, CliqueSet, Graph, canonical_clique

if TYPE_CHECKING:
    from .calc import OpCounters


@dataclass
class TriangleTable:
    """All triangles one node belongs to, stored canonically."""

    owner: int
    triangles: set[Clique] = field(default_factory=set)


@dataclass
class MutualNeighborView:
    """Per-neighbor mutual-neighbor sets for one node."""

    owner: int
    mutual: dict[int, set[int]]


def mutual_neighbors(g: Graph, v: int, n: int) -> set[int]:
    """Nodes adjacent to both v and n (excludes v and n themselves)."""
    if v == n:
        raise ValueError("mutual neighbors need two distinct nodes")
    return g.neighbors(v) & g.neighbors(n)


def mutual_neighbor_view(g: Graph, v: int) -> MutualNeighborView:
    """v's mutual-neighbor sets with each of its neighbors."""
    adj_v = g.neighbors(v)
    return MutualNeighborView(
        owner=v, mutual={n: adj_v & g.neighbors(n) for n in sorted(adj_v)}
    )


def introductions_for(g: Graph, v: int) -> tuple[TriangleTable, list[Clique]]:
    """One node's view after hearing every neighbor advertisement.

    Returns the node's triangle table plus the maximal 2-cliques it detected
    (one per neighbor with an empty mutual-neighbor set).
    """
    table = TriangleTable(owner=v)
    two_cliques: list[Clique] = []
    adj_v = g.neighbors(v)
    for n in sorted(adj_v):
        mutual = adj_v & g.neighbors(n)
        if not mutual:
            two_cliques.append(canonical_clique((v, n)))
            continue
        for m in mutual:
            table.triangles.add(canonical_clique((v, n, m)))
    return table, two_cliques


def run_introductions(
    g: Graph,
    *,
    include_singletons: bool = True,
    counters: OpCounters | None = None,
) -> tuple[dict[int, TriangleTable], CliqueSet]:
    """Run the introduction phase for every node.

    Returns per-node triangle tables and the early clique set: deduplicated
    maximal 2-cliques, plus a singleton clique per isolated node unless
    ``include_singletons`` is off.
    """
    tables: dict[int, TriangleTable] = {}
    early: CliqueSet = set()
    for v in g.nodes():
        table, twos = introductions_for(g, v)
        tables[v] = table
        early.update(twos)
        d = g.degree(v)
        if include_singletons and d == 0:
            early.add((v,))
        if counters is not None:
            counters.phase1_ops += d * (d - 1)
    return tables, early
