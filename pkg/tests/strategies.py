"""Hypothesis strategies shared across the property tests."""

from hypothesis import strategies as st

from cliquekit import Graph


@st.composite
def small_graphs(draw: st.DrawFn, min_nodes: int = 0, max_nodes: int = 10) -> Graph:
    n = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    g = Graph()
    for _ in range(n):
        g.add_node()
    if n >= 2:
        possible = [(i, j) for i in range(n) for j in range(i + 1, n)]
        chosen = draw(
            st.lists(st.sampled_from(possible), unique=True, max_size=len(possible))
        )
        for a, b in chosen:
            g.connect(a, b)
    return g
