import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codesupport.errors import DimensionMismatch
from codesupport.field import field_new, gf
from codesupport.linalg import MatrixFq, mat_vec_mul, nullspace_basis, rank, rref, vec_dot

from oracles import BruteField, span

F2, F3 = field_new(2), field_new(3)


@st.composite
def matrices(draw, qs=(2, 3, 4, 5, 7, 8, 9)):
    q = draw(st.sampled_from(qs))
    rows = draw(st.integers(0, 5))
    cols = draw(st.integers(1, 7))
    entries = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=cols, max_size=cols),
                            min_size=rows, max_size=rows))
    return MatrixFq(gf(q), entries, cols=cols)


def test_rref_identity():
    I = MatrixFq.identity(F3, 4)
    R, piv = rref(I)
    assert R == I and piv == [0, 1, 2, 3]


def test_rref_drops_zero_rows():
    R, piv = rref(MatrixFq(F2, [[1, 1, 0], [0, 0, 0]]))
    assert R.tolist() == [[1, 1, 0]] and piv == [0]


def test_rref_dependent_rows_gf3():
    # second row is twice the first over GF(3)
    assert [(2 * x) % 3 for x in (1, 2)] == [2, 1]
    R, piv = rref(MatrixFq(F3, [[1, 2], [2, 1]]))
    assert R.tolist() == [[1, 2]] and piv == [0]


def test_nullspace_of_identity_is_empty():
    K = nullspace_basis(MatrixFq.identity(F2, 5))
    assert K.shape == (0, 5)


def test_nullspace_of_all_ones_is_even_weight_code():
    K = nullspace_basis(MatrixFq(F2, [[1, 1, 1]]))
    assert K.rows == 2
    assert span(BruteField(2), K.tolist(), 3) == {(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)}


def test_nullspace_of_random_rank_three_matrix():
    rng = np.random.default_rng(7)
    while True:
        M = MatrixFq(F2, rng.integers(0, 2, (3, 7)))
        if rank(M) == 3:
            break
    K = nullspace_basis(M)
    assert K.rows == 4
    B = BruteField(2)
    for v in K.tolist():
        assert all(B.dot(v, row) == 0 for row in M.tolist())


def test_nullspace_of_empty_matrix_is_identity():
    K = nullspace_basis(MatrixFq(F3, [], cols=4))
    assert K == MatrixFq.identity(F3, 4)


def test_vec_dot_examples():
    e2 = [0, 1, 0, 0]
    assert vec_dot(F3, e2, e2) == 1
    u = [int(c) for c in "1110000"]
    v = [int(c) for c in "0001111"]
    assert vec_dot(F2, u, v) == 0
    assert vec_dot(F3, [1, 2, 2], [0, 0, 0]) == 0


def test_vec_dot_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        vec_dot(F2, [1, 0], [1, 0, 1])
    with pytest.raises(DimensionMismatch):
        mat_vec_mul(MatrixFq(F2, [[1, 1]]), [1, 1, 1])


def test_mat_vec_mul():
    M = MatrixFq(F3, [[1, 2, 0], [0, 1, 1]])
    assert mat_vec_mul(M, [1, 1, 1]).tolist() == [0, 2]


def test_ragged_rows_rejected():
    with pytest.raises(DimensionMismatch):
        MatrixFq(F2, [[1, 0], [1]])
    with pytest.raises(ValueError):
        MatrixFq(F2, [[2, 0]])


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_properties(M):
    R, piv = rref(M)
    assert rref(R)[0] == R
    assert piv == sorted(set(piv))
    for j, c in enumerate(piv):
        col = R.entries[:, c]
        assert col[j] == 1 and np.count_nonzero(col) == 1
        assert not R.entries[j, :c].any()
    B = BruteField(M.field.p, M.field.modulus)
    if M.field.q ** max(M.rows, R.rows) <= 4096:
        assert span(B, R.tolist(), M.cols) == span(B, M.tolist(), M.cols)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity_and_orthogonality(M):
    K = nullspace_basis(M)
    assert rank(M) + K.rows == M.cols
    assert rank(K) == K.rows
    B = BruteField(M.field.p, M.field.modulus)
    for v in K.tolist():
        for row in M.tolist():
            assert B.dot(v, row) == 0
