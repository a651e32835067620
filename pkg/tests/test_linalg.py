from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from asreg.linalg import QMatrix, SingularMatrix, Subspace, kernel_basis, rref_rank, solve, span_compare

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_rref_of_rank_one():
    r, rank = rref_rank(QMatrix.from_rows([[2, 4], [1, 2]]))
    assert rank == 1
    assert r.tolist()[0] == [1, 2]


def test_inverse_and_det():
    m = QMatrix.parse("1,2;3,4")
    assert m.det() == -2
    assert m.inverse().tolist() == [[-2, 1], [Fraction(3, 2), Fraction(-1, 2)]]
    with pytest.raises(SingularMatrix):
        QMatrix.parse("1,2;2,4").inverse()


def test_parse_round_trip():
    m = QMatrix.parse("1/2,0;-3,7")
    assert QMatrix.parse(m.to_str()) == m


def test_float_entries_rejected():
    with pytest.raises((TypeError, ValueError)):
        QMatrix.from_rows([[0.5, 1]])


def test_subspace_membership():
    s = Subspace(3, [[1, 0, 0], [0, 1, 0]])
    assert s.dim == 2
    assert s.contains([1, 1, 0]) and not s.contains([0, 0, 1])
    assert span_compare(s, Subspace(3, [[1, 1, 0], [1, -1, 0]])) == "equal"


@settings(max_examples=40, deadline=None)
@given(matrices(3, 4))
def test_kernel_vectors_are_killed(rows):
    m = QMatrix.from_rows(rows)
    ker = kernel_basis(m)
    assert len(ker) == 4 - m.rank()
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in rows)


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3), matrices(3, 3))
def test_det_is_multiplicative(a, b):
    A, B = QMatrix.from_rows(a), QMatrix.from_rows(b)
    assert (A @ B).det() == A.det() * B.det()


@settings(max_examples=30, deadline=None)
@given(matrices(3, 3), st.lists(small, min_size=3, max_size=3))
def test_solve_recovers_rhs(a, x):
    A = QMatrix.from_rows(a)
    if not A.is_invertible():
        return
    b = [sum(r * y for r, y in zip(row, x)) for row in a]
    assert list(solve(A, b)) == x
