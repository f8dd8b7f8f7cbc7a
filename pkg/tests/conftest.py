import pytest

from cliquekit import GeneratorSpec, generate

# letter ids used throughout the fixture tests
A, B, C, D, E, F, G = range(7)


@pytest.fixture
def fig3a():
    graph, names = generate(GeneratorSpec(kind="fig3a"))
    return graph, names


@pytest.fixture
def fig4a():
    graph, names = generate(GeneratorSpec(kind="fig4a"))
    return graph, names
