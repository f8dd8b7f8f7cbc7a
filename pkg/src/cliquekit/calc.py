"""Whole-graph calculation: run both phases, aggregate, and answer queries."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping

from .graph import Clique, CliqueSet, Graph, is_clique
from .introductions import run_introductions
from .pairmerge import MergeOptions, run_pair_merge


@dataclass
class OpCounters:
    """Platform-independent work counters.

    phase1_ops counts neighbor advertisements (one adjacency probe each);
    phase2_ops counts key-node scan comparisons plus pairing lookups.
    """

    phase1_ops: int = 0
    phase2_ops: int = 0


@dataclass
class CalcOptions:
    merge: MergeOptions = field(default_factory=MergeOptions)
    include_singletons: bool = True


@dataclass
class CalcResult:
    all_cliques: CliqueSet
    largest: Clique | None
    per_node: dict[int, list[Clique]]
    early_cliques: CliqueSet
    counters: OpCounters


def do_calculation(g: Graph, opts: CalcOptions | None = None) -> CalcResult:
    """Run introductions then pair merging for every node and aggregate.

    The graph must not be mutated for the duration of the call. Output is
    deterministic for identical inputs: nodes are processed ascending and
    cliques are deduplicated by canonical form.
    """
    opts = opts or CalcOptions()
    counters = OpCounters()
    tables, early = run_introductions(
        g, include_singletons=opts.include_singletons, counters=counters
    )

    break_at = opts.merge.break_at_size
    if break_at is not None and any(len(c) >= break_at for c in early):
        # an early 2-clique or singleton already satisfies the requested size
        per_node: dict[int, list[Clique]] = {v: [] for v in g.nodes()}
    else:
        per_node = run_pair_merge(tables, opts.merge, counters)

    all_cliques: CliqueSet = set(early)
    for emitted in per_node.values():
        all_cliques.update(emitted)

    largest = None
    if all_cliques:
        # max size first, then lexicographically smallest member tuple
        largest = min(all_cliques, key=lambda c: (-len(c), c))

    return CalcResult(
        all_cliques=all_cliques,
        largest=largest,
        per_node=per_node,
        early_cliques=early,
        counters=counters,
    )


def largest_found_clique(result: CalcResult) -> Clique:
    """The largest clique found, ties broken lexicographically."""
    if result.largest is None:
        raise ValueError("no cliques: the graph is empty")
    return result.largest


def has_clique_of_size(
    g: Graph, k: int, opts: CalcOptions | None = None
) -> tuple[bool, Clique | None]:
    """Decide whether the merge algorithm finds a clique of size >= k.

    Runs with the break size set to k and returns (True, witness) as soon as
    a qualifying clique is emitted; the witness is re-verified edge by edge
    before being returned. A False answer means no such clique was emitted,
    which this algorithm does not certify as absence.
    """
    if k < 1:
        raise ValueError("clique size k must be >= 1")
    opts = opts or CalcOptions()
    run_opts = replace(opts, merge=replace(opts.merge, break_at_size=k))
    result = do_calculation(g, run_opts)
    if result.largest is not None and len(result.largest) >= k:
        witness = result.largest
        if not is_clique(g, witness):
            raise RuntimeError(f"emitted witness {witness} is not a clique")
        return True, witness
    return False, None


def per_node_report(
    result: CalcResult, names: Mapping[int, str] | None = None
) -> str:
    """One line per node: the cliques that node discovered, in order.

    Early cliques (singletons and maximal 2-cliques) appear on the line of
    every node they contain, ahead of the merge-phase emissions. Node names
    come from ``names`` when given, else the numeric ids.
    """
    names = names or {}

    def label(v: int) -> str:
        return names.get(v, str(v))

    def fmt(clique: Clique) -> str:
        return "[" + ",".join(label(v) for v in clique) + "]"

    lines = []
    for v in sorted(result.per_node):
        early = sorted(c for c in result.early_cliques if v in c)
        rendered = [fmt(c) for c in early] + [fmt(c) for c in result.per_node[v]]
        lines.append(f"{label(v)}: {' '.join(rendered)}".rstrip())
    return "\n".join(lines)
