import pytest
from hypothesis import settings, strategies as st

from families import (
    cycle,
    dart,
    hypercube,
    k4_leaf,
    path,
    petersen,
    wheel5,
)
from forcing import is_zero_forcing_set
from graphs import Graph

# exhaustive searches make per-example timing noisy
settings.register_profile("zf", deadline=None)
settings.load_profile("zf")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    """Arbitrary simple graphs, possibly disconnected."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    tree = [(draw(st.integers(min_value=0, max_value=v - 1)), v) for v in range(1, n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, set(tree) | set(extra))


@st.composite
def zero_forcing_pairs(draw, min_n: int = 1, max_n: int = 6) -> tuple[Graph, frozenset[int]]:
    """A graph with a zero forcing set: the shortest prefix of a random
    vertex order that forces."""
    g = draw(graphs(min_n=min_n, max_n=max_n))
    order = draw(st.permutations(list(g.vertices)))
    for k in range(g.n + 1):
        if is_zero_forcing_set(g, order[:k]):
            return g, frozenset(order[:k])
    raise AssertionError("V(G) always forces")


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def dart_graph():
    return dart()


@pytest.fixture
def wheel():
    return wheel5()


@pytest.fixture
def k4_plus_leaf():
    return k4_leaf()


@pytest.fixture
def petersen_graph():
    return petersen()


@pytest.fixture
def q3():
    return hypercube(3)
