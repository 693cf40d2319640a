import math

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from errors import BudgetExceededError, Graph6ParseError, GraphArgumentError
from families import complete, cycle, dart, generalized_star, path, star
from graphs import (
    Graph,
    MatchingSpec,
    are_isomorphic,
    basic_metrics,
    cartesian_product,
    components,
    cone,
    delete_vertex,
    encode_graph6,
    find_isomorphism,
    induced_subgraph,
    is_path,
    is_tree,
    mask_of,
    matching_graph,
    members,
    orbit_classes,
    parse_graph6,
)


@given(st.sets(st.integers(min_value=0, max_value=40)))
def test_mask_members_inverse(vertices):
    """members() lists the vertices of a mask in increasing order."""
    assert members(mask_of(vertices)) == sorted(vertices)


@given(graphs(min_n=0, max_n=12))
def test_graph6_agrees_with_networkx(g):
    """Our encoder produces the same bytes as networkx's graph6 writer, and
    parsing gives back the same edge set."""
    text = encode_graph6(g)
    assert text == nx.to_graph6_bytes(g.to_networkx(), header=False).decode().strip()
    assert parse_graph6(text) == g


def test_graph6_known_strings():
    assert encode_graph6(cycle(4)) == "Cl"
    assert encode_graph6(dart()) == "D^G"
    assert parse_graph6(">>graph6<<Cl\n") == cycle(4)


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("C", 1),
    ("Clx", 2),
    ("C\x7f", 1),
    ("~", 0),
    (" ", 0),
])
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6ParseError) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_from_edges_rejects_loops_and_out_of_range():
    with pytest.raises(GraphArgumentError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphArgumentError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphArgumentError):
        Graph.from_edges(-1, [])


def test_duplicate_and_reversed_edges_collapse():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert g.m == 2
    assert g.neighbors(1) == {0, 2}


def test_labels_and_aliases():
    g = generalized_star(1, 2, 3)
    assert g.vertex("v") == 0
    assert g.vertex("u1") == g.vertex("w1") == 1
    assert g.vertex_set(["w2", "u2"]) == {2, 3}
    assert g.label(6) == "u3"
    with pytest.raises(GraphArgumentError):
        g.vertex("nope")


def test_cartesian_product_sizes():
    """|E(G □ H)| = |G||E(H)| + |H||E(G)|."""
    g, h = cycle(5), path(2)
    product = cartesian_product(g, h)
    assert product.n == 10
    assert product.m == g.n * h.m + h.n * g.m
    assert product.degrees() == [3] * 10


def test_cartesian_product_needs_nonempty_factors():
    with pytest.raises(GraphArgumentError):
        cartesian_product(Graph.edgeless(0), path(2))


def test_matching_graph_layout():
    g = matching_graph(path(2), path(2), MatchingSpec.identity(2))
    assert g.n == 4
    assert sorted(g.edges) == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert are_isomorphic(g, cycle(4))


def test_matching_graph_rejects_mismatched_orders():
    with pytest.raises(GraphArgumentError):
        matching_graph(path(2), path(3), MatchingSpec.identity(2))
    with pytest.raises(GraphArgumentError):
        matching_graph(path(3), path(3), MatchingSpec.identity(2))
    with pytest.raises(GraphArgumentError):
        MatchingSpec((0, 0, 1))


@given(st.permutations(list(range(6))))
def test_matching_inverse_composes_to_identity(perm):
    spec = MatchingSpec(tuple(perm))
    inv = spec.inverse()
    assert all(inv.mu[spec.mu[i]] == i for i in range(6))


def test_matching_graph_with_identity_is_prism():
    """(G, G, id) is G □ P2 up to isomorphism."""
    k3 = complete(3)
    assert are_isomorphic(matching_graph(k3, k3, MatchingSpec.identity(3)),
                          cartesian_product(k3, path(2)))


def test_cone_of_cycle_is_wheel():
    w = cone(cycle(4))
    assert w.n == 5
    assert w.degree(4) == 4


def test_induced_subgraph_relabels():
    g, old = induced_subgraph(cycle(5), [4, 0, 1])
    assert old == (0, 1, 4)
    assert sorted(g.edges) == [(0, 1), (0, 2)]


def test_delete_vertex():
    g, old = delete_vertex(path(2), 0)
    assert g.n == 1 and g.m == 0
    assert old == (1,)
    with pytest.raises(GraphArgumentError):
        delete_vertex(path(2), 2)


def test_metrics():
    metrics = basic_metrics(path(5))
    assert metrics.components == 1
    assert metrics.diameter == 4
    assert basic_metrics(Graph.edgeless(3)).diameter == math.inf
    assert components(Graph.from_edges(4, [(2, 3)])) == [{0}, {1}, {2, 3}]


def test_tree_and_path_predicates():
    assert is_path(path(1))
    assert is_path(path(6))
    assert is_tree(star(3)) and not is_path(star(3))
    assert not is_tree(cycle(4))
    assert not is_tree(Graph.edgeless(0))


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_isomorphism_witness_of_relabelled_graph(g, rnd):
    """A random relabelling of G is isomorphic to G and the witness maps
    edges to edges."""
    perm = list(g.vertices)
    rnd.shuffle(perm)
    h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    phi = find_isomorphism(g, h)
    assert phi is not None
    assert {tuple(sorted((phi[u], phi[v]))) for u, v in g.edges} == set(h.edges)


def test_non_isomorphic():
    assert not are_isomorphic(cycle(4), path(4))
    assert not are_isomorphic(star(3), path(4))


def test_isomorphism_budget():
    with pytest.raises(BudgetExceededError):
        find_isomorphism(path(13), path(13))


def test_orbit_classes_of_dart():
    """The six minimum zero forcing sets of the dart fall into three
    automorphism classes."""
    sets = [frozenset(s) for s in ([0, 2], [0, 3], [0, 4], [1, 2], [1, 3], [1, 4])]
    classes = orbit_classes(dart(), sets)
    assert len(classes) == 3
    assert sorted(len(c) for c in classes) == [2, 2, 2]
