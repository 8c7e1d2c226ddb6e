import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from matrices import TWO_CYCLE, TWO_CYCLE_23
from netgames.errors import BudgetExceeded, DuplicateEdge, IndexOutOfRange, NegativeWeight
from netgames.matrix import (
    WeightMatrix,
    build_matrix,
    enumerate_walks,
    is_irreducible,
    matrix_power,
    walk_sum,
)


def small_matrices(max_n=6, elements=(0.0, 0.5, 1.0, 2.0)):
    return st.integers(1, max_n).flatmap(
        lambda n: arrays(float, (n, n), elements=st.sampled_from(elements))
    )


def test_build_two_cycle():
    W = build_matrix(2, [(0, 1, 1.0), (1, 0, 1.0)])
    np.testing.assert_array_equal(W.entries, TWO_CYCLE)


def test_build_empty_single_node():
    np.testing.assert_array_equal(build_matrix(1, []).entries, [[0.0]])


@pytest.mark.parametrize(
    "edges, error",
    [
        ([(0, 1, -1.0)], NegativeWeight),
        ([(0, 2, 1.0)], IndexOutOfRange),
        ([(0, 1, 1.0), (0, 1, 2.0)], DuplicateEdge),
    ],
)
def test_build_rejects(edges, error):
    with pytest.raises(error):
        build_matrix(2, edges)


def test_weight_matrix_is_immutable():
    W = WeightMatrix(TWO_CYCLE)
    with pytest.raises(ValueError):
        W.entries[0, 0] = 5.0


def test_labels_must_be_bijective():
    with pytest.raises(Exception):
        WeightMatrix(TWO_CYCLE, ("a", "a"))
    assert WeightMatrix(TWO_CYCLE, ("a", "b")).index_of("b") == 1


@pytest.mark.parametrize(
    "a, expected",
    [
        ([[0, 1], [1, 0]], True),
        ([[0, 1], [0, 0]], False),
        ([[0]], False),
        ([[3]], True),
        ([[0, 1, 0], [0, 0, 1], [1, 0, 0]], True),
        ([[0, 1, 0], [1, 0, 0], [0, 0, 0]], False),
    ],
)
def test_is_irreducible(a, expected):
    assert is_irreducible(np.array(a, dtype=float)) is expected


@settings(max_examples=200, deadline=None)
@given(small_matrices())
def test_irreducibility_invariant_under_transpose(a):
    assert is_irreducible(a) == is_irreducible(a.T)


def test_matrix_power_examples():
    np.testing.assert_array_equal(matrix_power(TWO_CYCLE, 2).entries, np.eye(2))
    np.testing.assert_array_equal(matrix_power(TWO_CYCLE_23, 0).entries, np.eye(2))
    # (0,1,0) with weight 2*3 and (1,0,1) with weight 3*2 are the only length-2 walks
    np.testing.assert_array_equal(matrix_power(TWO_CYCLE_23, 2).entries, [[6.0, 0.0], [0.0, 6.0]])


def test_walk_enumeration_examples():
    walks = enumerate_walks(TWO_CYCLE, 2, 0, 0)
    assert [(w.nodes, weight) for w, weight in walks] == [((0, 1, 0), 1.0)]
    assert walks[0][0].length == 2
    assert enumerate_walks(TWO_CYCLE, 3, 0, 0) == []
    assert [(w.nodes, x) for w, x in enumerate_walks(TWO_CYCLE_23, 2, 0, 0)] == [((0, 1, 0), 6.0)]


def test_walk_sum_examples():
    assert walk_sum(TWO_CYCLE, 2, 0, 0) == 1.0
    assert walk_sum(TWO_CYCLE, 3, 0, 0) == 0.0
    # (W^2)_00 squared, 6 * 6
    assert walk_sum(TWO_CYCLE_23, 4, 0, 0) == 36.0


def test_walks_are_lexicographic_and_valid():
    a = np.array([[1.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.5]])
    walks = enumerate_walks(a, 3, 0, 2)
    seqs = [w.nodes for w, _ in walks]
    assert seqs == sorted(seqs)
    for w, weight in walks:
        assert w.nodes[0] == 0 and w.nodes[-1] == 2 and w.length == 3
        assert weight == pytest.approx(np.prod([a[u, v] for u, v in zip(w.nodes, w.nodes[1:])]))


def test_walk_budget():
    a = np.ones((4, 4))
    assert len(enumerate_walks(a, 4, 0, 0)) == 64
    with pytest.raises(BudgetExceeded):
        enumerate_walks(a, 4, 0, 0, cap=63)


@settings(max_examples=150, deadline=None)
@given(small_matrices(), st.integers(1, 5), st.data())
def test_walk_sum_identity(a, ell, data):
    n = a.shape[0]
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1))
    assert abs(walk_sum(a, ell, i, j) - matrix_power(a, ell).entries[i, j]) <= 1e-12


@settings(max_examples=100, deadline=None)
@given(small_matrices(max_n=5, elements=(0.0, 1.0)), st.integers(1, 5))
def test_walk_count_on_unit_weights(a, ell):
    power = matrix_power(a, ell).entries
    for i in range(a.shape[0]):
        for j in range(a.shape[0]):
            assert len(enumerate_walks(a, ell, i, j)) == power[i, j]


@settings(max_examples=100, deadline=None)
@given(small_matrices(), st.integers(0, 4), st.integers(0, 4))
def test_matrix_power_is_additive_in_exponent(a, p, q):
    lhs = matrix_power(a, p + q).entries
    rhs = matrix_power(a, p).entries @ matrix_power(a, q).entries
    assert np.max(np.abs(lhs - rhs)) <= 1e-12
