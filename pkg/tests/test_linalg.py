from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from nilorbits import linalg

entries = st.one_of(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=4))


@st.composite
def matrices(draw, max_rows=7, max_cols=7):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    return [[draw(entries) for _ in range(n)] for _ in range(m)]


@settings(max_examples=100, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_rank_agrees_with_bareiss_and_sympy(M, rnd):
    order = list(range(len(M[0])))
    rnd.shuffle(order)
    r = linalg.rank_exact(M)
    assert r == linalg.bareiss_rank(M, order)
    assert r == sympy.Matrix(M).rank()


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_nullspace_is_kernel(M):
    ncols = len(M[0])
    ker = linalg.nullspace(M, ncols=ncols)
    assert len(ker) == ncols - linalg.rank_exact(M)
    for v in ker:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in M)
    if ker:
        assert linalg.rank_exact(ker) == len(ker)


@settings(max_examples=80, deadline=None)
@given(matrices(max_rows=6, max_cols=6), st.lists(st.integers(-4, 4), min_size=6, max_size=6))
def test_solve_consistent_systems(M, x):
    x = x[: len(M[0])]
    b = [sum(Fraction(a) * c for a, c in zip(row, x)) for row in M]
    sol = linalg.solve(M, b)
    assert sol is not None
    assert [sum(Fraction(a) * c for a, c in zip(row, sol)) for row in M] == b


def test_solve_inconsistent():
    assert linalg.solve([[1, 1], [2, 2]], [1, 3]) is None


def test_power_ranks_rejects_non_nilpotent():
    import pytest

    with pytest.raises(ValueError):
        linalg.power_ranks([[1, 0], [0, 0]])


def test_power_ranks_jordan_block():
    J = [[int(j == i + 1) for j in range(4)] for i in range(4)]
    assert linalg.power_ranks(J) == [3, 2, 1]


def test_independent_subset_and_primitive():
    vecs = [[1, 0, 1], [2, 0, 2], [0, 1, 0], [1, 1, 1]]
    assert linalg.independent_subset(vecs) == [0, 2]
    assert linalg.primitive([4, -6, 2]) == [2, -3, 1]
    assert linalg.primitive([0, -2, 4]) == [0, 1, -2]
