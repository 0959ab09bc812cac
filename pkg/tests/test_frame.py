import pytest

from algiso.errors import CapExceeded, FrameDeficient, NotInV0
from algiso.field import GF, QQ
from algiso.frame import (
    build_frame,
    candidate_order,
    covariant_row,
    default_k_max,
    frame_from_provenance,
)
from algiso.linalg import Mat, inverse, kron_pow, rank
from algiso.msc import MSC, act, t1, tr1, tr2
from algiso.normalize import normalize
from algiso.oracle import random_gl

from conftest import direct_sum, dual_numbers, sample_in_v0


def covariant_row_naive(A, i, k):
    # Materializes Pi_k = A^{kron 1} A^{kron 2} ... A^{kron 2^(k-1)} and C^{kron 2^k}.
    F, m = A.field, A.m
    T = t1(A)
    C = inverse(T)
    Pi = Mat.identity(F, m)
    for l in range(k):
        Pi = Pi @ kron_pow(A.mat, 2**l)
    X = Pi @ kron_pow(C, 2**k) @ Pi.T @ T @ A.mat
    return tr1(X) if i == 1 else tr2(X)


def test_k0_rows_are_trace_rows(field, rng):
    A = sample_in_v0(3, field, rng)
    assert covariant_row(A, 1, 0) == tr1(A)
    assert covariant_row(A, 2, 0) == tr2(A)


def test_direct_sum_rows():
    A = direct_sum(QQ)
    for k in range(4):
        for i in (1, 2):
            assert covariant_row(A, i, k) == Mat(QQ, [[1, 1]])


@pytest.mark.parametrize(
    "m,k,F",
    [(2, 1, QQ), (2, 2, QQ), (2, 3, GF(5)), (3, 1, QQ), (3, 2, GF(7)), (1, 3, QQ)],
    ids=str,
)
def test_fast_rows_equal_naive_product(m, k, F, rng):
    A = sample_in_v0(m, F, rng)
    for i in (1, 2):
        assert covariant_row(A, i, k) == covariant_row_naive(A, i, k)


@pytest.mark.parametrize("F", [QQ, GF(5)], ids=repr)
def test_row_covariance_any_g(F, rng):
    for m, kmax in ((2, 2), (3, 1)):
        A = sample_in_v0(m, F, rng)
        g = random_gl(m, F, rng)
        B = act(g, A)
        h = inverse(g)
        for k in range(kmax + 1):
            for i in (1, 2):
                assert covariant_row(B, i, k) == covariant_row(A, i, k) @ h


def test_row_errors():
    with pytest.raises(NotInV0):
        covariant_row(dual_numbers(QQ), 1, 1)
    with pytest.raises(CapExceeded):
        covariant_row(direct_sum(QQ), 1, 4, cap=6561)
    with pytest.raises(ValueError):
        covariant_row(direct_sum(QQ), 3, 0)


def test_candidate_order():
    assert candidate_order(1) == [(1, 0), (2, 0), (1, 1), (2, 1)]
    assert default_k_max(2) == 3 and default_k_max(3) == 2


def test_direct_sum_frame_deficient():
    for kmax in (0, 1, 3):
        with pytest.raises(FrameDeficient) as info:
            build_frame(normalize(direct_sum(QQ)).Abar, kmax)
        assert info.value.achieved_rank == 1


def test_trace_rows_independent_gives_k0_frame():
    A = MSC.from_table(QQ, 2, {(0, 0): [1, 0], (0, 1): [0, 1], (1, 1): [0, 1]})
    assert tr1(A) == Mat(QQ, [[1, 1]]) and tr2(A) == Mat(QQ, [[2, 1]])
    f = build_frame(normalize(A).Abar)
    assert f.provenance == ((1, 0), (2, 0))


def test_random_frames_found(rng):
    found = 0
    for _ in range(20):
        A = sample_in_v0(2, QQ, rng)
        try:
            f = build_frame(normalize(A).Abar, 2)
        except FrameDeficient:
            continue
        found += 1
        assert rank(f.P) == 2
        assert f == frame_from_provenance(normalize(A).Abar, f.provenance)
    assert found >= 18


@pytest.mark.parametrize("F", [QQ, GF(5), GF(3)], ids=repr)
def test_frame_covariance(F, rng):
    for m in (2, 3):
        A = sample_in_v0(m, F, rng, with_frame=True)
        g = random_gl(m, F, rng)
        B = act(g, A)
        nA, nB = normalize(A), normalize(B)
        fA, fB = build_frame(nA.Abar), build_frame(nB.Abar)
        assert fA.provenance == fB.provenance
        g0 = nB.Q @ g @ inverse(nA.Q)
        assert act(g0, nA.Abar) == nB.Abar
        assert fB.P == fA.P @ inverse(g0)
        assert build_frame(nA.Abar) == fA
