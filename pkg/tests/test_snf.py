import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from birburn.oracle import naive_invariant_factors
from birburn.snf import is_smith_form, matmul, smith_normal_form
from birburn.verify import bareiss_det

sympy = pytest.importorskip("sympy")
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors  # noqa: E402


def sympy_factors(A):
    """(factors > 1, rank) according to sympy."""
    if not A or not A[0]:
        return [], 0
    facs = [int(x) for x in sympy_invariant_factors(sympy.Matrix(A), domain=sympy.ZZ)]
    return [abs(x) for x in facs if abs(x) > 1], sum(1 for x in facs if x)


matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-12, 12), min_size=n, max_size=n),
                       min_size=1, max_size=6))


def check_transforms(A):
    n = len(A[0])
    snf = smith_normal_form(A, n)
    assert matmul(matmul(snf.dense_U(), A), snf.dense_V()) == snf.dense_D()
    assert abs(bareiss_det(snf.dense_U())) == 1
    assert abs(bareiss_det(snf.dense_V())) == 1
    assert is_smith_form(snf.diagonal)
    return snf


def test_known_examples():
    snf = check_transforms([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert snf.diagonal == [2, 6, 12]
    snf = check_transforms([[2, 0], [0, 3]])
    assert snf.diagonal == [1, 6]
    snf = check_transforms([[0, 0, 0]])
    assert snf.rank == 0 and snf.free_rank == 3


def test_sparse_input_matches_dense():
    dense = [[1, 0, 2], [0, 4, 0]]
    sparse = [{0: 1, 2: 2}, {1: 4}]
    assert smith_normal_form(dense, 3).diagonal == smith_normal_form(sparse, 3).diagonal


def test_is_smith_form():
    assert is_smith_form([1, 2, 6, 0])
    assert not is_smith_form([2, 3])
    assert not is_smith_form([0, 1])


def test_oracle_agrees_with_sympy_on_example():
    A = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    assert naive_invariant_factors(A) == sympy_factors(A) == ([2, 6, 12], 3)


@settings(max_examples=200)
@given(matrices)
def test_snf_matches_oracle_and_sympy(A):
    snf = check_transforms(A)
    ours = (snf.invariant_factors, snf.rank)
    assert ours == naive_invariant_factors(A)
    assert ours == sympy_factors(A)


@given(matrices)
def test_transpose_has_same_factors(A):
    At = [list(r) for r in zip(*A)]
    a = smith_normal_form(A, len(A[0]))
    b = smith_normal_form(At, len(A))
    assert (a.invariant_factors, a.rank) == (b.invariant_factors, b.rank)
