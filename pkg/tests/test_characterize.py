from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from characterize import (
    GENSTAR_ROWS,
    build_trail,
    classify_trivial_extremes,
    comb_analysis,
    comb_prescribed_set,
    component_necessity_check,
    decide_matching_kn,
    decide_PT_nminus2_tree,
    decide_pt_nminus2,
    find_matching_partition,
    generalized_star_table,
    leaf_lower_bound,
    one_force_per_round,
    prime_subgraph,
    pt1_matching_analysis,
    pt1_vertex_tests,
    star_prism_check,
    zigzag_conditions,
    zigzag_decompose,
    zigzag_decompositions,
    zigzag_violations,
)
from conftest import connected_graphs
from constants import DEFAULT_MAX_ORDER_Z
from errors import GraphArgumentError, PreconditionError
from families import comb, complete, cycle, path, path_plus_isolated, star, t_shaped
from forcing import ForceSet, record_forces
from graphs import (
    PETERSEN_MATCHING,
    Graph,
    MatchingSpec,
    basic_metrics,
    cartesian_product,
    disjoint_union,
    matching_graph,
    parse_graph6,
)
from search import analyze
from utils import load_corpus


# PROPAGATION TIME n-1 AND 0

def test_paths_are_the_slowest_graphs():
    extremes = classify_trivial_extremes(path(5))
    assert extremes.pt_is_nminus1 and extremes.PT_is_nminus1 and extremes.z_is_1 and extremes.is_path
    assert not extremes.edgeless


def test_edgeless_graphs_are_the_fastest():
    extremes = classify_trivial_extremes(Graph.edgeless(3))
    assert extremes.pt_is_0 and extremes.PT_is_0 and extremes.z_is_n and extremes.edgeless
    assert not extremes.is_path


def test_single_vertex_is_both_extremes():
    extremes = classify_trivial_extremes(path(1))
    assert extremes.is_path and extremes.edgeless


def test_cycle_is_neither_extreme(c4):
    extremes = classify_trivial_extremes(c4)
    assert not any(vars(extremes).values())


def test_extremes_need_a_vertex():
    with pytest.raises(GraphArgumentError):
        classify_trivial_extremes(Graph.edgeless(0))


# PROPAGATION TIME n-2

def test_dart_is_a_qualifying_zigzag_graph(dart_graph):
    verdict = decide_pt_nminus2(dart_graph)
    assert verdict.route == "zigzag"
    assert verdict.brute_force and verdict.structural
    assert not verdict.exceptional
    assert all(verdict.conditions.values())
    assert zigzag_violations(dart_graph, verdict.decomposition) == []


def test_triangle_is_a_zigzag_graph():
    verdict = decide_pt_nminus2(complete(3))
    assert verdict.agree and verdict.verdict


def test_claw_is_the_only_tree():
    verdict = decide_pt_nminus2(star(3))
    assert verdict.route == "tree"
    assert verdict.structural and verdict.brute_force
    assert not decide_pt_nminus2(path(4)).verdict


def test_path_plus_isolated_vertex():
    verdict = decide_pt_nminus2(path_plus_isolated(6))
    assert verdict.route == "disconnected"
    assert verdict.brute_force and verdict.structural
    assert not decide_pt_nminus2(disjoint_union(complete(3), path(1))).verdict


def test_fast_cycle_has_no_decomposition(c4):
    """Both black vertices of C4 force in round one."""
    assert zigzag_decompose(c4) is None
    verdict = decide_pt_nminus2(c4)
    assert not verdict.structural and not verdict.brute_force


def test_t_shaped_decomposition():
    """In S(1, 1, 3) the leaves force the center one at a time, so the second
    path is a single leaf and Q stops after one step."""
    g = t_shaped(6)
    zz = zigzag_decompose(g)
    assert zz.P1 == (1, 0, 3, 4, 5)
    assert zz.P2 == (2,)
    assert zz.Q == (0, 2)
    assert zz.ell == 2
    assert zigzag_violations(g, zz) == []
    conditions = zigzag_conditions(g, zz)
    assert not conditions["b_first_degrees"]
    assert zz.precedes(0, 4) and not zz.precedes(4, 0)
    assert zz.next(5) is None and zz.prev(1) is None


@pytest.mark.parametrize("g6", ["EJe?", "FIc`G"])
def test_lollipops_are_qualifying_zigzag_graphs(g6):
    """A triangle with a pendant path: pt = n - 2 and some base decomposes."""
    g = parse_graph6(g6)
    verdict = decide_pt_nminus2(g)
    assert verdict.brute_force and verdict.structural
    assert all(verdict.conditions.values())
    assert zigzag_violations(g, verdict.decomposition) == []


def test_every_once_per_round_base_is_tried():
    """From {1, 2} both base vertices see the same white vertex, so the
    triangle edge between them lies outside the decomposition."""
    g = parse_graph6("EJe?")
    first, *rest = zigzag_decompositions(g)
    assert first.base == {1, 2}
    assert zigzag_violations(g, first)
    assert any(not zigzag_violations(g, zz) for zz in rest)
    assert zigzag_decompose(g).base != {1, 2}


def test_edgeless_pair_has_no_decomposition():
    g = parse_graph6("A?")
    assert analyze(g).Z == 2
    assert zigzag_decompositions(g) == []
    assert zigzag_decompose(g) is None


@settings(max_examples=60)
@given(connected_graphs(min_n=3, max_n=7))
def test_structure_and_search_never_disagree_on_slow_graphs(g):
    """Whenever exhaustive search finds pt(G) = |G| - 2, the structural test
    passes too; decide_pt_nminus2 raises otherwise."""
    verdict = decide_pt_nminus2(g)
    if verdict.brute_force:
        assert verdict.structural


def test_one_force_per_round():
    assert one_force_per_round(path(4), frozenset({0}))
    assert not one_force_per_round(path(4), frozenset({1}))


def test_t_shaped_trees_are_slowest_trees():
    assert decide_PT_nminus2_tree(t_shaped(7))
    assert not decide_PT_nminus2_tree(path(5))
    assert not decide_PT_nminus2_tree(star(4))
    with pytest.raises(GraphArgumentError):
        decide_PT_nminus2_tree(cycle(4))


@pytest.mark.parametrize("tree", load_corpus("trees:8"), ids=lambda t: repr(t))
def test_slowest_trees_over_all_small_trees(tree):
    decide_PT_nminus2_tree(tree)


# PROPAGATION TIME ONE

def test_matching_partition_of_c4(c4):
    left, right, mu = find_matching_partition(c4)
    assert left[0] == 0
    assert all(c4.has_edge(u, right[mu.mu[i]]) for i, u in enumerate(left))
    assert find_matching_partition(path(3)) is None
    assert find_matching_partition(star(3)) is None


def test_hypercube_satisfies_all_three(q3):
    analysis = pt1_matching_analysis(q3)
    assert analysis.halves_Z and analysis.pt_is_1 and analysis.is_matching_graph
    left, right = analysis.partition
    assert all(q3.has_edge(u, right[analysis.witness.mu[i]]) for i, u in enumerate(left))


def test_petersen_satisfies_all_three(petersen_graph):
    analysis = pt1_matching_analysis(petersen_graph)
    assert analysis.halves_Z and analysis.pt_is_1 and analysis.is_matching_graph


def test_c5_prism_is_only_a_matching_graph():
    analysis = pt1_matching_analysis(cartesian_product(cycle(5), path(2)))
    assert analysis.is_matching_graph
    assert not analysis.halves_Z and not analysis.pt_is_1


def test_triangle_has_pt_one_only():
    analysis = pt1_matching_analysis(complete(3))
    assert analysis.pt_is_1
    assert not analysis.halves_Z and not analysis.is_matching_graph


@given(st.permutations(list(range(3))))
def test_matching_with_a_complete_graph(mu):
    """(H, K_n, mu) has pt = 1 exactly when H is connected."""
    spec = MatchingSpec(tuple(mu))
    assert decide_matching_kn(path(3), spec)
    assert not decide_matching_kn(Graph.edgeless(3), spec)
    assert not decide_matching_kn(disjoint_union(path(2), path(1)), spec)


def test_equal_component_counts():
    check = component_necessity_check(cycle(5), cycle(5), PETERSEN_MATCHING)
    assert check.counts_equal
    assert check.pt == 1
    assert check.smaller_zfs is None


def test_unequal_component_counts_give_a_smaller_zero_forcing_set():
    """Two disjoint edges matched onto P4: the split component yields a zero
    forcing set of size three."""
    h1 = disjoint_union(path(2), path(2))
    check = component_necessity_check(h1, path(4), MatchingSpec.identity(4))
    assert (check.c1, check.c2, check.c) == (2, 1, 1)
    assert check.pt != 1
    assert check.smaller_zfs == {2, 3, 4}


def test_matching_graphs_of_small_connected_pairs():
    """Every (H1, H2, mu) over connected H1, H2 on at most three vertices is
    recognized as a matching graph, and the two-of-three rule holds."""
    pool = load_corpus("connected:3")
    built = 0
    for h1 in pool:
        for h2 in (h for h in pool if h.n == h1.n):
            for mu in permutations(range(h1.n)):
                spec = MatchingSpec(mu)
                analysis = pt1_matching_analysis(matching_graph(h1, h2, spec))
                assert analysis.is_matching_graph
                assert component_necessity_check(h1, h2, spec).counts_equal
                built += 1
    assert built == 1 + 2 + 4 * 6


def test_wheel_hub_is_in_every_efficient_set(wheel):
    tests = pt1_vertex_tests(wheel)
    hub = tests[0]
    assert hub.member and hub.degree == 4 and hub.all_efficient_have_two
    assert not any(t.member for t in tests[1:])


@pytest.mark.parametrize("name", ["q3", "petersen_graph"])
def test_vertex_transitive_graphs_have_no_common_efficient_vertex(name, request):
    g = request.getfixturevalue(name)
    assert not any(t.member for t in pt1_vertex_tests(g))


def test_vertex_tests_need_pt_one(p3):
    with pytest.raises(PreconditionError):
        pt1_vertex_tests(p3)


def test_prime_subgraph_of_the_wheel(wheel):
    """The hub sits idle while b and c force; removing it leaves C4."""
    b = frozenset({0, 1, 2})
    f = record_forces(wheel, b)
    assert f.forces == {(1, 4), (2, 3)}
    prime = prime_subgraph(wheel, b, f)
    assert prime.removed == {0}
    assert prime.mapping == (1, 2, 3, 4)
    assert prime.graph.n == 4 and prime.graph.m == 4
    assert prime.base == {0, 1}


def test_prime_subgraph_of_hypercube_keeps_everything(q3):
    b = analyze(q3).eff_sets()[0]
    prime = prime_subgraph(q3, b, record_forces(q3, b))
    assert prime.removed == frozenset()
    assert prime.graph == q3


def test_prime_subgraph_preconditions(wheel, p3):
    with pytest.raises(PreconditionError):
        prime_subgraph(p3, frozenset({0}), record_forces(p3, [0]))
    slow = frozenset({1, 2, 3})
    with pytest.raises(PreconditionError):
        prime_subgraph(wheel, slow, record_forces(wheel, slow))


# TRAILS AND DIAMETER

def test_trail_of_a_path():
    trail = build_trail(path(5), frozenset({0}))
    assert trail.vertices == (0, 1, 2, 3, 4)
    assert trail.length == 4
    assert trail.round_index == {1: 0, 2: 1, 3: 2, 4: 3}


def test_trail_can_outrun_the_diameter(dart_graph):
    """The dart has diameter 2 but pt = 3; a trail still carries one force
    per round."""
    b = analyze(dart_graph).eff_sets()[0]
    trail = build_trail(dart_graph, b)
    assert trail.length >= 3
    assert basic_metrics(dart_graph).diameter == 2


def test_trail_of_a_zero_forcing_vertex_set():
    trail = build_trail(Graph.edgeless(2), frozenset({0, 1}))
    assert trail.vertices == (0,)
    assert trail.length == 0


def test_trail_needs_a_propagating_set_of_forces():
    g = path(4)
    lazy = ForceSet(frozenset({0, 3}), frozenset({(0, 1), (1, 2)}))
    with pytest.raises(PreconditionError):
        build_trail(g, frozenset({0, 3}), lazy)


@settings(max_examples=60)
@given(connected_graphs(max_n=7))
def test_every_minimum_set_has_a_trail(g):
    report = analyze(g)
    for b, t in zip(report.min_zfs_sets(), report.times):
        assert build_trail(g, b).length >= t


# FAMILIES

def test_comb_with_four_teeth():
    report = comb_analysis(4)
    assert report.exact
    assert (report.Z, report.pt, report.diameter) == (2, 3, 5)
    assert report.prescribed == ("l2", "l3")
    assert comb_prescribed_set(comb(4), 4) == {5, 6}


def test_comb_with_eight_teeth():
    report = comb_analysis(8)
    assert (report.Z, report.pt, report.diameter) == (4, 3, 9)
    assert report.leaf_bound == 4


def test_large_comb_is_checked_by_its_prescribed_set():
    """pt stays 3 while the diameter grows with k."""
    report = comb_analysis(12)
    assert not report.exact
    assert report.Z is None
    assert report.prescribed_pt == 3
    assert report.diameter == 13


@pytest.mark.parametrize("k", [0, 3, 6])
def test_comb_needs_a_multiple_of_four(k):
    with pytest.raises(GraphArgumentError):
        comb_analysis(k)


def test_leaf_lower_bound():
    assert leaf_lower_bound(comb(8)) == 4
    assert leaf_lower_bound(star(5)) == 3
    assert leaf_lower_bound(cycle(4)) == 0


@pytest.mark.parametrize("r", [2, 3, 4])
def test_star_prism(r):
    report = star_prism_check(r)
    assert report.Z == r
    assert report.pt >= 2


def test_star_prism_needs_two_leaves():
    with pytest.raises(GraphArgumentError):
        star_prism_check(1)


def test_generalized_star_table_matches_acceptance_values():
    table = generalized_star_table(2, 5, 11)
    assert [row.pt for row in table.rows] == [15, 15, 16, 15, 15, 16, 12, 12, 13]
    assert all(row.pt == row.predicted for row in table.rows)
    assert table.analysis.pt == 12 and table.analysis.PT == 16
    assert table.analysis.realized_times == [12, 13, 15, 16]
    assert [row.zero_forcing_set for row in table.rows] == [list(names) for names, _ in GENSTAR_ROWS]


STRICT_ARMS = [
    (e1, e2, e3)
    for e1 in range(2, DEFAULT_MAX_ORDER_Z)
    for e2 in range(e1 + 1, DEFAULT_MAX_ORDER_Z)
    for e3 in range(e2 + 1, DEFAULT_MAX_ORDER_Z)
    if 1 + e1 + e2 + e3 <= DEFAULT_MAX_ORDER_Z
]


@pytest.mark.parametrize("arms", STRICT_ARMS, ids=lambda arms: "S(%d,%d,%d)" % arms)
def test_generalized_star_closed_forms(arms):
    """For 1 < e1 < e2 < e3 every labelled row agrees with its closed form;
    generalized_star_table raises on a mismatch."""
    table = generalized_star_table(*arms)
    e1, e2, e3 = arms
    assert all(row.pt == row.predicted for row in table.rows)
    assert table.analysis.pt == e1 + e3 - 1
    assert table.analysis.PT == e2 + e3


def test_non_strict_arms_report_no_prediction():
    table = generalized_star_table(2, 2, 3)
    assert all(row.predicted is None for row in table.rows)
