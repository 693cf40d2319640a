from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from errors import GraphArgumentError, WitnessError
from families import complete, cycle, path
from graphs import are_isomorphic, cartesian_product, parse_graph6
from nullity import (
    RationalMatrix,
    base_graph,
    certify_family,
    conforms,
    hat_step,
    involution_witness,
    nullity,
    rank,
)
from search import SearchBudget


small_integer_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-3, max_value=3), min_size=n, max_size=n),
        min_size=n, max_size=n))


@given(small_integer_matrices)
def test_rank_agrees_with_numpy(rows):
    """Exact elimination agrees with floating point rank on small integer
    matrices."""
    assert rank(RationalMatrix.from_rows(rows)) == np.linalg.matrix_rank(np.array(rows, dtype=float))


@given(small_integer_matrices, st.integers(min_value=2, max_value=7))
def test_rank_ignores_rational_scaling(rows, d):
    a = RationalMatrix.from_rows(rows)
    assert rank(a.scaled(Fraction(1, d))) == rank(a)


def test_rank_examples():
    assert rank(RationalMatrix.identity(4)) == 4
    assert nullity(RationalMatrix.ones(3)) == 2
    assert rank(RationalMatrix.from_rows([[0, 0], [0, 0]])) == 0
    assert rank(RationalMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [1, Fraction(2, 3)]])) == 1
    assert rank(RationalMatrix.from_rows([[0, 1, 2], [0, 2, 4], [1, 0, 0]])) == 2


def test_matrix_must_be_square():
    with pytest.raises(GraphArgumentError):
        RationalMatrix.from_rows([[1, 2, 3], [4, 5, 6]])


def test_arithmetic_is_exact():
    third = RationalMatrix.identity(2).scaled(Fraction(1, 3))
    assert third + third + third == RationalMatrix.identity(2)
    assert (third - third) == RationalMatrix.identity(2).scaled(0)
    assert -third == third.scaled(-1)
    assert third.rows() == [[Fraction(1, 3), 0], [0, Fraction(1, 3)]]
    assert third.to_strings() == [["1/3", "0/1"], ["0/1", "1/3"]]


def test_conforms():
    p3 = path(3)
    adjacency = RationalMatrix.from_rows([[5, 1, 0], [1, 0, -2], [0, -2, 7]])
    assert conforms(adjacency, p3)
    assert not conforms(RationalMatrix.identity(3), p3)
    with pytest.raises(GraphArgumentError):
        conforms(RationalMatrix.identity(2), p3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_complete_graph_involution(n):
    l = involution_witness("Kn", n)
    assert l @ l == RationalMatrix.identity(n)
    assert conforms(l, complete(n))
    assert l.entries[0, 0] == 1 - Fraction(2, n)


def test_witness_families():
    assert involution_witness("P2").rows() == [[0, 1], [1, 0]]
    with pytest.raises(GraphArgumentError):
        base_graph("Kn", 1)
    with pytest.raises(GraphArgumentError):
        base_graph("C5")


def test_hat_step_from_p2():
    step = hat_step(involution_witness("P2"), path(2))
    assert are_isomorphic(step.graph, cycle(4))
    assert nullity(step.H) == 2
    assert step.M_unscaled @ step.M_unscaled == RationalMatrix.identity(4).scaled(2)
    assert step.next_involution @ step.next_involution == RationalMatrix.identity(4)


def test_hat_step_rejects_bad_input():
    k2 = complete(2)
    with pytest.raises(WitnessError):
        hat_step(RationalMatrix.identity(2), k2)
    with pytest.raises(WitnessError):
        hat_step(RationalMatrix.from_rows([[0, 2], [2, 0]]), k2)
    with pytest.raises(WitnessError):
        hat_step(RationalMatrix.from_rows([[0, 1], [2, 0]]), k2)


@pytest.mark.parametrize("name, n, steps, order", [
    ("P2", 2, 1, 4),
    ("P2", 2, 2, 8),
    ("Kn", 2, 1, 4),
    ("Kn", 3, 1, 6),
    ("Kn", 3, 2, 12),
    ("Kn", 4, 1, 8),
])
def test_certificates(name, n, steps, order):
    """Nullity of the witness matches Z(G), and both equal |G| / 2."""
    cert = certify_family(name, n, steps)
    assert cert.order == order
    assert cert.M_lower == cert.Z == cert.expected == order // 2
    assert cert.Z_upper == order // 2
    assert cert.pt == 1
    assert cert.symmetric and cert.square_is_2I


@pytest.mark.slow
def test_four_cube_certificate():
    cert = certify_family("P2", steps=3)
    assert cert.order == 16
    assert cert.M_lower == cert.Z == 8


def test_certificate_over_search_budget():
    cert = certify_family("P2", steps=3, budget=SearchBudget(max_order=10))
    assert cert.Z is None
    assert cert.M_lower == 8


def test_certificate_for_prism_is_the_cartesian_product():
    cert = certify_family("Kn", 3, 1)
    assert cert.family == "K3"
    assert are_isomorphic(parse_graph6(cert.graph6), cartesian_product(complete(3), path(2)))


def test_p2_witness_matrix():
    cert = certify_family("P2")
    assert cert.witness[0] == ["0/1", "1/1", "1/1", "0/1"]
    assert cert.witness[2] == ["1/1", "0/1", "0/1", "-1/1"]


def test_certificate_needs_a_step():
    with pytest.raises(GraphArgumentError):
        certify_family("P2", steps=0)
