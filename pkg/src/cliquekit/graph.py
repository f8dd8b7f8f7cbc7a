"""Undirected simple graph with dense integer node ids and canonical cliques.

A clique is represented as a strictly ascending tuple of node ids, so tuple
equality and hashing give clique identity for free and a ``set`` of such
tuples is a deduplicated clique collection.
"""

from __future__ import annotations

from typing import Iterable

Clique = tuple[int, ...]
CliqueSet = set[Clique]


def canonical_clique(members: Iterable[int]) -> Clique:
    """Return the canonical (strictly ascending) tuple for a vertex set.

    Rejects empty input and repeated members; ``canonical_clique([2, 0, 1])``
    and ``canonical_clique([0, 1, 2])`` are the same value.
    """
    ordered = tuple(sorted(members))
    if not ordered:
        raise ValueError("a clique needs at least one member")
    for a, b in zip(ordered, ordered[1:]):
        if a == b:
            raise ValueError(f"duplicate member {a} in clique")
    return ordered


class Graph:
    """Simple undirected graph, mutable while built, read-only afterwards.

    Node ids are dense 0-based integers assigned in creation order.
    Adjacency stays symmetric and self-loop free; ``edge_count`` is always
    half the degree sum. Every algorithm in this package treats a finished
    graph as immutable, which makes concurrent reads safe.
    """

    __slots__ = ("_adj", "_edge_count")

    def __init__(self) -> None:
        self._adj: list[set[int]] = []
        self._edge_count = 0

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def add_node(self) -> int:
        """Create a fresh node, connected to nothing, and return its id."""
        self._adj.append(set())
        return len(self._adj) - 1

    def _check_node(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise ValueError(
                f"node id {v} out of range (graph has {len(self._adj)} nodes)"
            )

    def connect(self, a: int, b: int) -> None:
        """Add the undirected edge {a, b}; connecting twice is a no-op."""
        self._check_node(a)
        self._check_node(b)
        if a == b:
            raise ValueError(f"self-loop rejected on node {a}")
        if b not in self._adj[a]:
            self._adj[a].add(b)
            self._adj[b].add(a)
            self._edge_count += 1

    def new_complete_subgraph(self, k: int) -> list[int]:
        """Create k fresh pairwise-connected nodes and return their ids."""
        if k < 1:
            raise ValueError("complete subgraph needs k >= 1")
        ids = [self.add_node() for _ in range(k)]
        for i, a in enumerate(ids):
            for b in ids[i + 1 :]:
                self.connect(a, b)
        return ids

    def neighbors(self, v: int) -> set[int]:
        """Adjacency set of v. The live internal set: treat as read-only."""
        self._check_node(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_node(v)
        return len(self._adj[v])

    def are_adjacent(self, a: int, b: int) -> bool:
        self._check_node(a)
        self._check_node(b)
        return b in self._adj[a]

    def nodes(self) -> range:
        return range(len(self._adj))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (lo, hi) pairs, ascending."""
        return [
            (a, b) for a in self.nodes() for b in sorted(self._adj[a]) if a < b
        ]

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


def is_clique(g: Graph, members: Iterable[int]) -> bool:
    """True iff every two distinct members are adjacent (singletons count)."""
    ms = list(members)
    for i, a in enumerate(ms):
        for b in ms[i + 1 :]:
            if not g.are_adjacent(a, b):
                return False
    return True


def is_maximal_clique(g: Graph, members: Iterable[int]) -> bool:
    """True iff members form a clique no outside vertex extends."""
    ms = set(members)
    if not is_clique(g, ms):
        return False
    common: set[int] | None = None
    for v in ms:
        adj = g.neighbors(v)
        common = set(adj) if common is None else common & adj
        if not common:
            break
    # neighbors never include their own node, so any survivor is an
    # outside vertex adjacent to every member
    return not common
