"""Deterministic graph construction: fixtures, families, and the PRNG.

Randomized families draw from splitmix64 so identical seeds reproduce
identical edge sets on every platform (and in any port of this tool). The
constants are fixed here and documented in the README:

    state' = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state'
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output = z ^ (z >> 31)

G(n, p) visits vertex pairs (i, j), i < j, in lexicographic order, draws one
64-bit value per pair, and keeps the edge iff value < floor(p * 2^64).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

GENERATOR_KINDS = ("complete", "gnp", "moon_moser", "planted_clique", "fig3a", "fig4a")

# 6 nodes A..F = 0..5; the two-clique neighborhood walkthrough fixture
_FIG3A_NAMES = {0: "A", 1: "B", 2: "C", 3: "D", 4: "E", 5: "F"}
_FIG3A_EDGES = [
    (0, 1), (0, 2), (0, 3),  # A-B A-C A-D
    (1, 2), (1, 3),          # B-C B-D
    (2, 3), (2, 4), (2, 5),  # C-D C-E C-F
    (4, 5),                  # E-F
]

# 7 nodes A..G = 0..6; the overlapping-cliques fixture
_FIG4A_NAMES = {0: "A", 1: "B", 2: "C", 3: "D", 4: "E", 5: "F", 6: "G"}
_FIG4A_EDGES = [
    (2, 0), (2, 1), (2, 3), (2, 4), (2, 5), (2, 6),  # C to everyone
    (0, 1), (0, 3), (0, 4), (0, 5),                  # A-B A-D A-E A-F
    (1, 3), (1, 4),                                  # B-D B-E
    (3, 4),                                          # D-E
    (4, 5), (4, 6),                                  # E-F E-G
    (5, 6),                                          # F-G
]


def prng_next(state: int) -> tuple[int, int]:
    """Advance the splitmix64 state; returns (new_state, 64-bit output)."""
    state = (state + _GAMMA) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return state, z ^ (z >> 31)


def prng_stream(seed: int) -> Iterator[int]:
    """Endless splitmix64 output stream for the given seed."""
    state = seed & _MASK64
    while True:
        state, value = prng_next(state)
        yield value


@dataclass(frozen=True)
class GeneratorSpec:
    """A reproducible graph description; see GENERATOR_KINDS."""

    kind: str
    n: int | None = None
    p: float | None = None
    k: int | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(
                f"unknown generator kind {self.kind!r}; expected one of {GENERATOR_KINDS}"
            )
        need = {
            "complete": ("n",),
            "gnp": ("n", "p", "seed"),
            "moon_moser": ("k",),
            "planted_clique": ("n", "k", "p", "seed"),
            "fig3a": (),
            "fig4a": (),
        }[self.kind]
        for name in need:
            if getattr(self, name) is None:
                raise ValueError(f"generator {self.kind!r} needs field {name!r}")
        if self.kind == "complete" and self.n < 1:
            raise ValueError("complete graph needs n >= 1")
        if self.kind == "moon_moser" and self.k < 1:
            raise ValueError("moon_moser needs k >= 1")
        if self.kind == "planted_clique" and not 1 <= self.k <= self.n:
            raise ValueError("planted clique needs 1 <= k <= n")
        if self.p is not None and not 0.0 <= self.p <= 1.0:
            raise ValueError("edge probability must be in [0, 1]")
        if self.seed is not None and not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must fit in 64 bits")

    def descriptor(self) -> str:
        """Canonical spec string, parseable by parse_generator_spec."""
        parts = []
        for name in ("n", "k", "p", "seed"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value:g}" if name == "p" else f"{name}={value}")
        return self.kind if not parts else f"{self.kind}:{','.join(parts)}"


def parse_generator_spec(text: str) -> GeneratorSpec:
    """Parse a spec string such as ``gnp:n=10,p=0.5,seed=7`` or ``fig3a``."""
    text = text.strip()
    kind, _, arg_text = text.partition(":")
    fields: dict[str, int | float] = {}
    if arg_text:
        for item in arg_text.split(","):
            name, eq, raw = item.partition("=")
            name = name.strip()
            if not eq or name not in ("n", "p", "k", "seed"):
                raise ValueError(f"bad generator argument {item!r} in {text!r}")
            fields[name] = float(raw) if name == "p" else int(raw)
    return GeneratorSpec(kind=kind, **fields)


def _build_fixture(edges: list[tuple[int, int]], names: dict[int, str]) -> Graph:
    g = Graph()
    for _ in names:
        g.add_node()
    for a, b in edges:
        g.connect(a, b)
    return g


def _gnp_edges(g: Graph, ids: list[int], p: float, seed: int) -> None:
    threshold = int(p * (1 << 64))
    stream = prng_stream(seed)
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            if next(stream) < threshold:
                g.connect(a, b)


def generate(spec: GeneratorSpec) -> tuple[Graph, dict[int, str] | None]:
    """Build the graph for a spec; fixtures also return their name table."""
    if spec.kind == "fig3a":
        return _build_fixture(_FIG3A_EDGES, _FIG3A_NAMES), dict(_FIG3A_NAMES)
    if spec.kind == "fig4a":
        return _build_fixture(_FIG4A_EDGES, _FIG4A_NAMES), dict(_FIG4A_NAMES)

    g = Graph()
    if spec.kind == "complete":
        g.new_complete_subgraph(spec.n)
    elif spec.kind == "gnp":
        ids = [g.add_node() for _ in range(spec.n)]
        _gnp_edges(g, ids, spec.p, spec.seed)
    elif spec.kind == "moon_moser":
        # k groups of 3; adjacency exactly between distinct groups
        ids = [g.add_node() for _ in range(3 * spec.k)]
        for i, a in enumerate(ids):
            for b in ids[i + 1 :]:
                if a // 3 != b // 3:
                    g.connect(a, b)
    elif spec.kind == "planted_clique":
        ids = [g.add_node() for _ in range(spec.n)]
        _gnp_edges(g, ids, spec.p, spec.seed)
        for i in range(spec.k):
            for j in range(i + 1, spec.k):
                g.connect(i, j)
    else:  # pragma: no cover - kinds validated in GeneratorSpec
        raise ValueError(f"unhandled generator kind {spec.kind!r}")
    return g, None


def gnp_corpus(
    count: int,
    n_range: tuple[int, int] = (4, 12),
    p_values: tuple[float, ...] = (0.3, 0.5, 0.7),
    seed: int = 0,
) -> list[GeneratorSpec]:
    """A deterministic batch of G(n, p) specs for tests and campaigns.

    Sizes are drawn from the seed stream, probabilities cycle through
    ``p_values``, and every instance gets its own derived seed.
    """
    lo, hi = n_range
    if not 1 <= lo <= hi:
        raise ValueError("need 1 <= n_lo <= n_hi")
    stream = prng_stream(seed)
    specs = []
    for i in range(count):
        n = lo + next(stream) % (hi - lo + 1)
        specs.append(
            GeneratorSpec(
                kind="gnp", n=n, p=p_values[i % len(p_values)], seed=next(stream)
            )
        )
    return specs
