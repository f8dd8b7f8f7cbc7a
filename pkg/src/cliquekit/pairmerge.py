"""Pair-merge phase: fold each node's triangle table into maximal cliques.

Every triangle {owner, a, b} contributes the pair (a, b) to the owner's pair
list. Unmerged pairs then seed merge runs: a run grows a member list around a
key node by scanning the other pairs once, in sorted order, and admitting a
candidate only when it is paired with every member accumulated so far.
Merged pairs can no longer seed a run but stay visible to pairing lookups
and to the key-node scan.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .graph import Clique, canonical_clique
from .introductions import TriangleTable

if TYPE_CHECKING:
    from .calc import OpCounters

KEY_FIRST = "first-of-pair"
KEY_SECOND = "second-of-pair"
KEY_BOTH = "both"
KEY_STRATEGIES = (KEY_FIRST, KEY_SECOND, KEY_BOTH)


@dataclass
class NodePair:
    """Canonically oriented neighbor pair with its merge mark."""

    lo: int
    hi: int
    merged: bool = False

    def __post_init__(self) -> None:
        if self.lo >= self.hi:
            raise ValueError(f"pair must be ascending, got ({self.lo}, {self.hi})")

    def other(self, v: int) -> int:
        return self.hi if v == self.lo else self.lo


@dataclass
class PairList:
    """One node's merge working set: sorted pairs plus a lookup index."""

    owner: int
    pairs: list[NodePair]
    _index: dict[tuple[int, int], NodePair] = field(repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        if not self._index:
            self._index = {(p.lo, p.hi): p for p in self.pairs}
        if len(self._index) != len(self.pairs):
            raise ValueError("duplicate pairs in pair list")


@dataclass
class MergeOptions:
    key_node_strategy: str = KEY_FIRST
    break_at_size: int | None = None

    def __post_init__(self) -> None:
        if self.key_node_strategy not in KEY_STRATEGIES:
            raise ValueError(
                f"unknown key node strategy {self.key_node_strategy!r}; "
                f"expected one of {KEY_STRATEGIES}"
            )
        if self.break_at_size is not None and self.break_at_size < 1:
            raise ValueError("break_at_size must be >= 1")


def build_pair_list(v: int, table: TriangleTable) -> PairList:
    """The owner's pair list: each triangle with the owner removed, sorted."""
    if table.owner != v:
        raise ValueError(f"table owner {table.owner} is not node {v}")
    raw: list[tuple[int, int]] = []
    for tri in table.triangles:
        if v not in tri:
            raise ValueError(f"triangle {tri} does not contain owner {v}")
        a, b = (x for x in tri if x != v)
        raw.append((a, b))  # canonical triangles keep a < b
    raw.sort()
    return PairList(owner=v, pairs=[NodePair(a, b) for a, b in raw])


def paired_in_list(pl: PairList, a: int, b: int) -> bool:
    """True iff {a, b} is a pair of the list, merged or not."""
    if a == b:
        return False
    key = (a, b) if a < b else (b, a)
    return key in pl._index


def _mark_merged(pl: PairList, a: int, b: int) -> None:
    pair = pl._index.get((a, b) if a < b else (b, a))
    if pair is not None:
        pair.merged = True


def _merge_pass(
    v: int,
    pl: PairList,
    use_second_key: bool,
    break_at_size: int | None,
    counters: OpCounters | None,
) -> list[Clique]:
    out: list[Clique] = []
    pairs = pl.pairs
    for i, seed in enumerate(pairs):
        if seed.merged:
            continue
        members = [seed.lo, seed.hi]
        key = seed.hi if use_second_key else seed.lo
        for j, pp in enumerate(pairs):
            if j == i:
                continue
            if counters is not None:
                counters.phase2_ops += 1
            if pp.lo != key and pp.hi != key:
                continue
            s = pp.other(key)
            admit = True
            for m in members:
                if counters is not None:
                    counters.phase2_ops += 1
                if not paired_in_list(pl, s, m):
                    admit = False
                    break
            if admit:
                # consume the pairs joining s to the run so none of them can
                # seed later; the key pair pp is among them since key is a
                # member
                for m in members:
                    _mark_merged(pl, s, m)
                members.append(s)
        seed.merged = True
        clique = canonical_clique([v, *members])
        out.append(clique)
        if break_at_size is not None and len(clique) >= break_at_size:
            break
    return out


def merge_cliques_for_node(
    v: int,
    pl: PairList,
    opts: MergeOptions | None = None,
    counters: OpCounters | None = None,
) -> list[Clique]:
    """Merge one node's pair list into the cliques it can account for.

    Single forward scan per seed; a run that admits nobody still emits its
    seed triangle {v, lo, hi}. With the ``both`` strategy the list is run
    once per key choice and the emissions are deduplicated in first-seen
    order. The pair list must arrive with all merge marks clear.
    """
    opts = opts or MergeOptions()
    if pl.owner != v:
        raise ValueError(f"pair list owner {pl.owner} is not node {v}")
    if any(p.merged for p in pl.pairs):
        raise ValueError("pair list already carries merge marks")

    if opts.key_node_strategy == KEY_BOTH:
        first = _merge_pass(v, pl, False, opts.break_at_size, counters)
        if opts.break_at_size is not None and first and len(first[-1]) >= opts.break_at_size:
            return first
        fresh = PairList(owner=v, pairs=[NodePair(p.lo, p.hi) for p in pl.pairs])
        second = _merge_pass(v, fresh, True, opts.break_at_size, counters)
        merged = list(first)
        seen = set(first)
        for c in second:
            if c not in seen:
                seen.add(c)
                merged.append(c)
        return merged

    return _merge_pass(
        v, pl, opts.key_node_strategy == KEY_SECOND, opts.break_at_size, counters
    )


def run_pair_merge(
    tables: dict[int, TriangleTable],
    opts: MergeOptions | None = None,
    counters: OpCounters | None = None,
) -> dict[int, list[Clique]]:
    """Run the merge phase per node, ascending, honoring the break size.

    Once any node surfaces a clique of ``break_at_size`` the remaining nodes
    are skipped and map to empty emission lists.
    """
    opts = opts or MergeOptions()
    per_node: dict[int, list[Clique]] = {}
    stop = False
    for v in sorted(tables):
        if stop:
            per_node[v] = []
            continue
        pl = build_pair_list(v, tables[v])
        cliques = merge_cliques_for_node(v, pl, opts, counters)
        per_node[v] = cliques
        if opts.break_at_size is not None and any(
            len(c) >= opts.break_at_size for c in cliques
        ):
            stop = True
    return per_node
