"""Independent ground truth for maximal clique sets.

The exhaustive subset scan is the anchor of trust on tiny graphs; the
pivoting Bron-Kerbosch enumeration extends it to medium graphs. Both are
deliberately separate code paths from the merge algorithm they check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Clique, CliqueSet, Graph, canonical_clique

HARD_BRUTE_FORCE_CAP = 24  # 2^24 subsets is the ceiling of desk-scale


@dataclass
class OracleLimits:
    brute_force_max_nodes: int = 16

    def __post_init__(self) -> None:
        if self.brute_force_max_nodes > HARD_BRUTE_FORCE_CAP:
            raise ValueError(
                f"brute force capped at {HARD_BRUTE_FORCE_CAP} nodes"
            )


def brute_force_maximal_cliques(
    g: Graph, limits: OracleLimits | None = None
) -> CliqueSet:
    """Enumerate every non-empty vertex subset and keep the maximal cliques."""
    limits = limits or OracleLimits()
    n = g.node_count
    if n > limits.brute_force_max_nodes:
        raise ValueError(
            f"graph has {n} nodes, above the brute-force limit "
            f"{limits.brute_force_max_nodes}"
        )
    adj_mask = [sum(1 << u for u in g.neighbors(v)) for v in range(n)]
    out: CliqueSet = set()
    for mask in range(1, 1 << n):
        members = [v for v in range(n) if mask >> v & 1]
        # clique: each member must be adjacent to all the others
        if any(mask & ~(adj_mask[v] | (1 << v)) for v in members):
            continue
        common = (1 << n) - 1
        for v in members:
            common &= adj_mask[v]
        # adjacency excludes self, so any survivor is an outside extender
        if common:
            continue
        out.add(tuple(members))
    return out


def bron_kerbosch_pivot(g: Graph) -> CliqueSet:
    """Complete maximal clique enumeration with pivoting.

    Pivot: the vertex of P | X with the most candidate neighbors, ties to
    the smallest id, so traversal is deterministic.
    """
    adj = [g.neighbors(v) for v in g.nodes()]
    out: CliqueSet = set()

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            if r:
                out.add(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: (len(p & adj[u]), -u))
        for v in sorted(p - adj[pivot]):
            r.append(v)
            expand(r, p & adj[v], x & adj[v])
            r.pop()
            p.remove(v)
            x.add(v)

    expand([], set(g.nodes()), set())
    return out


def max_clique_size_oracle(g: Graph) -> int:
    """Largest clique size per Bron-Kerbosch; 0 for the empty graph."""
    return max((len(c) for c in bron_kerbosch_pivot(g)), default=0)


def triangles_oracle(g: Graph, v: int) -> set[Clique]:
    """All triangles containing v, by direct triple enumeration."""
    n = g.node_count
    g.neighbors(v)  # id validation
    out: set[Clique] = set()
    for a in range(n):
        if a == v or not g.are_adjacent(v, a):
            continue
        for b in range(a + 1, n):
            if b == v:
                continue
            if g.are_adjacent(v, b) and g.are_adjacent(a, b):
                out.add(canonical_clique((v, a, b)))
    return out
