import pytest

from algiso.errors import CapExceeded, DimensionMismatch, SingularMatrix
from algiso.field import GF, QQ
from algiso.linalg import Mat, hstack, inverse, kron, kron_pow, vstack
from algiso.msc import (
    MSC,
    act,
    block_kron,
    block_tensor_pow_row,
    blocks,
    from_blocks,
    multiply,
    tilde_trace,
    tr1,
    tr2,
    ttr_form,
)
from algiso.oracle import random_algebra, random_gl

from conftest import direct_sum, dual_numbers


def e(F, m, i):
    return Mat.column(F, [1 if r == i else 0 for r in range(m)])


def test_act_identity_and_scalar_case(field, rng):
    A = random_algebra(3, field, rng)
    assert act(Mat.identity(field, 3), A) == A
    c, t = field.coerce(6), field.coerce(5) if field != GF(5) else field.coerce(2)
    A1 = MSC(Mat(field, [[c]]))
    assert act(Mat(field, [[t]]), A1) == MSC(Mat(field, [[field.div(c, t)]]))


def test_act_errors():
    A = direct_sum(QQ)
    with pytest.raises(SingularMatrix):
        act(Mat(QQ, [[1, 2], [2, 4]]), A)
    with pytest.raises(DimensionMismatch):
        act(Mat.identity(QQ, 3), A)


def test_act_composition(field, rng):
    for m in (2, 3):
        A = random_algebra(m, field, rng)
        g, h = random_gl(m, field, rng), random_gl(m, field, rng)
        assert act(g, act(h, A)) == act(g @ h, A)


def test_blocks_examples():
    F = QQ
    A1, A2 = blocks(direct_sum(F))
    assert A1 == Mat(F, [[1, 0], [0, 0]]) and A2 == Mat(F, [[0, 0], [0, 1]])
    A1, A2 = blocks(dual_numbers(F))
    assert A1 == Mat.identity(F, 2) and A2 == Mat(F, [[0, 0], [1, 0]])
    assert all(b == Mat.zeros(F, 3, 3) for b in blocks(MSC.zero(F, 3)))


def test_blocks_reassemble(field, rng):
    A = random_algebra(3, field, rng)
    assert from_blocks(blocks(A)) == A
    for j, B in enumerate(blocks(A)):
        for i in range(3):
            for k in range(3):
                assert B[i, k] == A.constant(i, j, k)


def test_multiply_examples():
    F = QQ
    D = dual_numbers(F)
    assert multiply(D, e(F, 2, 0), e(F, 2, 1)) == e(F, 2, 1)
    assert multiply(D, e(F, 2, 1), e(F, 2, 1)) == Mat.zeros(F, 2, 1)
    S = direct_sum(F)
    for j in range(2):
        for k in range(2):
            expect = e(F, 2, j) if j == k else Mat.zeros(F, 2, 1)
            assert multiply(S, e(F, 2, j), e(F, 2, k)) == expect


def test_multiply_equivariance(field, rng):
    for m in (2, 3):
        A = random_algebra(m, field, rng)
        g = random_gl(m, field, rng)
        u = Mat.column(field, [rng.randint(-3, 3) for _ in range(m)])
        v = Mat.column(field, [rng.randint(-3, 3) for _ in range(m)])
        assert multiply(act(g, A), g @ u, g @ v) == g @ multiply(A, u, v)


def _tr_by_definition(A, which):
    F, m = A.field, A.m
    out = []
    for a in range(m):
        s = F.zero
        for i in range(m):
            s = F.add(s, A.constant(i, i, a) if which == 1 else A.constant(i, a, i))
        out.append(s)
    return Mat(F, [out])


def test_trace_rows_examples(field, rng):
    S = direct_sum(field)
    assert tr1(S) == Mat(field, [[1, 1]]) and tr2(S) == Mat(field, [[1, 1]])
    Z = MSC.zero(field, 3)
    assert tr1(Z) == Mat.zeros(field, 1, 3) == tr2(Z)
    for m in (1, 2, 3):
        A = random_algebra(m, field, rng)
        assert tr1(A) == _tr_by_definition(A, 1)
        assert tr2(A) == _tr_by_definition(A, 2)


def test_trace_rows_covariant(field, rng):
    for m in (2, 3):
        A = random_algebra(m, field, rng)
        g = random_gl(m, field, rng)
        h = inverse(g)
        assert tr1(act(g, A)) == tr1(A) @ h
        assert tr2(act(g, A)) == tr2(A) @ h


def test_block_tensor_pow_row(rng):
    F = QQ
    A = random_algebra(2, F, rng)
    A1, A2 = blocks(A)
    assert block_tensor_pow_row(A, 1) == [A1, A2]
    assert block_tensor_pow_row(A, 2) == [A1 @ A1, A1 @ A2, A2 @ A1, A2 @ A2]
    S = direct_sum(F)
    S1, S2 = blocks(S)
    Z = Mat.zeros(F, 2, 2)
    assert block_tensor_pow_row(S, 2) == [S1, Z, Z, S2]
    B = random_algebra(3, F, rng)
    Bb = blocks(B)
    words = block_tensor_pow_row(B, 3)
    assert len(words) == 27
    assert words[1 * 9 + 2 * 3 + 0] == Bb[1] @ Bb[2] @ Bb[0]


def test_ttr_form_examples():
    F = QQ
    assert ttr_form(direct_sum(F), 1).mat == Mat.identity(F, 2)
    assert ttr_form(dual_numbers(F), 1).mat == Mat(F, [[2, 0], [0, 0]])
    with pytest.raises(CapExceeded):
        ttr_form(direct_sum(F), 11)


def _block_column(A):
    return vstack(blocks(A))


def ttr_by_block_products(A, k):
    # Independent route: build column and row block powers with block_kron,
    # multiply as ordinary block matrices, then take blockwise traces.
    m = A.m
    col = _block_column(A)
    row = A.mat
    colk, rowk = col, row
    for _ in range(k - 1):
        colk = block_kron(colk, col, m)
        rowk = block_kron(rowk, row, m)
    return tilde_trace(colk @ rowk, m)


@pytest.mark.parametrize("m,k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_ttr_form_matches_block_matrix_route(m, k, rng):
    for F in (QQ, GF(5)):
        A = random_algebra(m, F, rng)
        T = ttr_form(A, k)
        assert T.mat == ttr_by_block_products(A, k)
        assert T.mat.is_symmetric()
        assert T.mat.shape == (m**k, m**k)


@pytest.mark.parametrize("m,k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_ttr_form_covariance(m, k, rng):
    for F in (QQ, GF(7)):
        A = random_algebra(m, F, rng)
        g = random_gl(m, F, rng)
        H = kron_pow(inverse(g), k)
        assert ttr_form(act(g, A), k).mat == H.T @ ttr_form(A, k).mat @ H


def test_block_form_of_action(field, rng):
    m = 3
    A = random_algebra(m, field, rng)
    g = random_gl(m, field, rng)
    h = inverse(g)
    conj = hstack([g @ b @ h for b in blocks(A)])
    assert act(g, A).mat == conj @ kron(h, Mat.identity(field, m))


def test_auxiliary_identities(field, rng):
    m = 2
    I = Mat.identity(field, m)

    def rm(r, c):
        return Mat(field, [[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)])

    C, D = rm(2, 3), rm(3, 2)
    assert block_kron(kron(C, I), kron(D, I), m) == kron(kron(C, D), I)
    C, E = rm(2, 3), rm(2, 2)
    Dblk = rm(3 * m, 2 * m)
    assert tilde_trace(kron(C, I) @ Dblk @ kron(E, I), m) == C @ tilde_trace(Dblk, m) @ E


def test_msc_shape_checked():
    with pytest.raises(DimensionMismatch):
        MSC(Mat.zeros(QQ, 2, 3))
