"""Covariant rows and the frame matrix P built from them.

A covariant row ``r`` satisfies ``r(act(g, A)) == r(A) @ g^-1`` for every
invertible ``g``. Stacking ``m`` independent ones gives ``P`` with
``P(act(g, A)) == P(A) @ g^-1``, so ``act(P(A), A)`` no longer depends on the
basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, FrameDeficient, NotInV0, SingularMatrix
from .linalg import Mat, inverse, kron, mul, rank, vstack
from .msc import MSC, t1, tr1, tr2

DEFAULT_ROW_CAP = 6561


def default_k_max(m: int) -> int:
    return 3 if m <= 2 else 2


def _contracted_gram(A: MSC, C: Mat, k: int) -> Mat:
    # Pi_k C^{kron 2^k} Pi_k^T with Pi_k = A^{kron 1} A^{kron 2} .. A^{kron 2^(k-1)}.
    # Peeling the last factor gives the recursion C -> A (C kron C) A^T, k times.
    M = C
    At = A.mat.T
    for _ in range(k):
        M = mul(mul(A.mat, kron(M, M)), At)
    return M


def covariant_row(A: MSC, i: int, k: int, cap: int = DEFAULT_ROW_CAP) -> Mat:
    """Row ``Tr_i(Pi_k (T1^-1)^{kron 2^k} Pi_k^T T1 A)`` as a ``1 x m`` matrix.

    ``i`` is 1 or 2 and selects :func:`~algiso.msc.tr1` or ``tr2``. For
    ``k = 0`` this is just ``tr_i(A)``.
    """
    if i not in (1, 2):
        raise ValueError("i must be 1 or 2")
    if k < 0:
        raise ValueError("k must be >= 0")
    if A.m ** (2**k) > cap:
        raise CapExceeded(f"m^(2^k) = {A.m ** (2 ** k)} exceeds cap {cap}")
    T = t1(A)
    try:
        C = inverse(T)
    except SingularMatrix:
        raise NotInV0("T1 is singular") from None
    X = mul(mul(_contracted_gram(A, C, k), T), A.mat)
    return tr1(X) if i == 1 else tr2(X)


def candidate_order(k_max: int):
    """(i, k) pairs in scan order: (1,0), (2,0), (1,1), (2,1), ..."""
    return [(i, k) for k in range(k_max + 1) for i in (1, 2)]


@dataclass(frozen=True)
class Frame:
    P: Mat
    provenance: tuple


def frame_from_provenance(Abar: MSC, provenance, cap: int = DEFAULT_ROW_CAP) -> Frame:
    P = vstack([covariant_row(Abar, i, k, cap) for i, k in provenance])
    if rank(P) < Abar.m:
        raise SingularMatrix(f"rows {list(provenance)} are dependent")
    return Frame(P, tuple(provenance))


def build_frame(Abar: MSC, k_max: int | None = None, cap: int = DEFAULT_ROW_CAP) -> Frame:
    """Greedy scan keeping each candidate row that raises the rank.

    Raises :class:`FrameDeficient` if rank ``m`` is not reached by ``k_max``.
    """
    m = Abar.m
    if k_max is None:
        k_max = default_k_max(m)
    chosen = []
    rows = []
    for i, k in candidate_order(k_max):
        r = covariant_row(Abar, i, k, cap)
        if rank(vstack(rows + [r])) > len(rows):
            rows.append(r)
            chosen.append((i, k))
            if len(rows) == m:
                return Frame(vstack(rows), tuple(chosen))
    raise FrameDeficient(len(rows), m, k_max)
