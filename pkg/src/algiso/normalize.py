"""Normal form of an algebra with respect to its trace form T1."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInV0
from .linalg import Mat, congruence_diagonalize, rank
from .msc import MSC, act, t1


@dataclass(frozen=True)
class NormalizedAlgebra:
    """``Abar = act(Q, original)`` with ``T1(Abar) == D`` diagonal and nonsingular."""

    original: MSC
    Abar: MSC
    Q: Mat
    D: Mat


def in_v0(A: MSC) -> bool:
    return rank(t1(A)) == A.m


def normalize(A: MSC) -> NormalizedAlgebra:
    T = t1(A)
    if rank(T) < A.m:
        raise NotInV0(f"T1 has rank {rank(T)} < {A.m}")
    Q, D = congruence_diagonalize(T)
    Abar = act(Q, A)
    return NormalizedAlgebra(original=A, Abar=Abar, Q=Q, D=D)
