"""Basis-independent invariants, isomorphism decisions, and rough classification."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    FrameDeficient,
    InternalInconsistency,
    NotInV0,
)
from .field import PrimeField
from .frame import (
    DEFAULT_ROW_CAP,
    Frame,
    build_frame,
    candidate_order,
    covariant_row,
    default_k_max,
)
from .linalg import Mat, congruence_diagonalize, inverse, mul, rank, vstack
from .msc import MSC, DEFAULT_TRACE_FORM_CAP, act, check_trace_form_cap, ttr_form
from .normalize import NormalizedAlgebra, normalize


@dataclass(frozen=True)
class InvariantPair:
    J1: MSC
    J2: Mat
    provenance: tuple


@dataclass(frozen=True)
class Equivalent:
    witness: Mat


@dataclass(frozen=True)
class Distinguisher:
    """First entry (row-major) at which the two invariant systems differ."""

    invariant: str
    row: int
    col: int
    left: object
    right: object


@dataclass(frozen=True)
class NotEquivalent:
    distinguisher: Distinguisher | None = None


@dataclass(frozen=True)
class OutOfScope:
    reason: str  # "NotInV0" | "FrameDeficient" | "ProvenanceMismatch"
    detail: str = ""


def _invariants_from(norm: NormalizedAlgebra, frame: Frame) -> InvariantPair:
    P_inv = inverse(frame.P)
    J1 = act(frame.P, norm.Abar)
    J2 = mul(mul(P_inv.T, norm.D), P_inv)
    return InvariantPair(J1, J2, frame.provenance)


def invariants(A: MSC, k_max: int | None = None, cap: int = DEFAULT_ROW_CAP) -> InvariantPair:
    """``J1 = act(P, Abar)`` and ``J2 = P^-T D P^-1`` for the normalized algebra.

    Raises NotInV0 or FrameDeficient when the construction does not apply.
    """
    norm = normalize(A)
    frame = build_frame(norm.Abar, k_max, cap)
    return _invariants_from(norm, frame)


def _shared_frames(nA, nB, k_max, cap):
    # First m-subset of candidates (lexicographic in scan order) that is
    # independent for both algebras.
    m = nA.Abar.m
    cands = candidate_order(k_max)
    rows_a, rows_b = {}, {}

    def row(store, algebra, c):
        if c not in store:
            store[c] = covariant_row(algebra, c[0], c[1], cap)
        return store[c]

    for subset in combinations(cands, m):
        Pa = vstack([row(rows_a, nA.Abar, c) for c in subset])
        if rank(Pa) < m:
            continue
        Pb = vstack([row(rows_b, nB.Abar, c) for c in subset])
        if rank(Pb) < m:
            continue
        return Frame(Pa, subset), Frame(Pb, subset)
    return None


def _first_difference(name, X: Mat, Y: Mat):
    for r, (xr, yr) in enumerate(zip(X.rows, Y.rows)):
        for c, (x, y) in enumerate(zip(xr, yr)):
            if x != y:
                fmt = X.field.format
                return Distinguisher(name, r, c, fmt(x), fmt(y))
    return None


def compare(A: MSC, B: MSC, k_max: int | None = None, cap: int = DEFAULT_ROW_CAP):
    """Decide whether ``B == act(g, A)`` for some invertible ``g``.

    Returns :class:`Equivalent` with a witness that has been checked exactly,
    :class:`NotEquivalent` with the first differing invariant entry, or
    :class:`OutOfScope` when the invariants are not available.
    """
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    if A.m != B.m:
        raise DimensionMismatch(f"m={A.m} vs m={B.m}")
    if k_max is None:
        k_max = default_k_max(A.m)

    norms = []
    for side, X in (("A", A), ("B", B)):
        try:
            norms.append(normalize(X))
        except NotInV0 as exc:
            return OutOfScope("NotInV0", f"{side}: {exc}")
    nA, nB = norms

    frames = []
    for side, n in (("A", nA), ("B", nB)):
        try:
            frames.append(build_frame(n.Abar, k_max, cap))
        except FrameDeficient as exc:
            return OutOfScope("FrameDeficient", f"{side}: {exc}")
    fA, fB = frames

    if fA.provenance != fB.provenance:
        shared = _shared_frames(nA, nB, k_max, cap)
        if shared is None:
            return OutOfScope(
                "ProvenanceMismatch",
                f"A selects {list(fA.provenance)}, B selects {list(fB.provenance)}; "
                "no common independent row set",
            )
        fA, fB = shared

    iA = _invariants_from(nA, fA)
    iB = _invariants_from(nB, fB)
    diff = _first_difference("J1", iA.J1.mat, iB.J1.mat) or _first_difference(
        "J2", iA.J2, iB.J2
    )
    if diff is not None:
        return NotEquivalent(diff)

    g0 = mul(inverse(fB.P), fA.P)
    g = mul(mul(inverse(nB.Q), g0), nA.Q)
    ok_action = act(g, A) == B
    ok_form = mul(mul(g0.T, nB.D), g0) == nA.D
    if not (ok_action and ok_form):
        raise InternalInconsistency(
            "invariants agree but the reconstructed witness does not verify",
            {
                "A": A,
                "B": B,
                "normalized": (nA, nB),
                "frames": (fA, fB),
                "invariants": (iA, iB),
                "g0": g0,
                "g": g,
                "action_ok": ok_action,
                "form_ok": ok_form,
            },
        )
    return Equivalent(g)


# Rough classification by quadratic-form invariants of T_k.


def squarefree_part(q: Fraction) -> int:
    """Signed squarefree integer ``s`` with ``q = s * r^2`` for rational ``r``."""
    if q == 0:
        raise ValueError("zero has no square class")
    from sympy import factorint

    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    s = 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            s *= p
    return sign * s


@dataclass(frozen=True)
class RoughInvariants:
    k: int
    rank: int
    signature: tuple | None  # (positive, negative, zero); rationals only
    disc_class: int  # squarefree part over QQ, +1/-1 residue flag over GF(p)


def _diagonal_data(A: MSC, k: int, cap: int):
    T = ttr_form(A, k, cap).mat
    _, D = congruence_diagonalize(T)
    diag = D.diagonal()
    nonzero = [d for d in diag if d != 0]
    F = A.field
    prod = F.one
    for d in nonzero:
        prod = F.mul(prod, d)
    return diag, nonzero, prod


def rough_invariants(A: MSC, k: int, cap: int = DEFAULT_TRACE_FORM_CAP) -> RoughInvariants:
    diag, nonzero, prod = _diagonal_data(A, k, cap)
    F = A.field
    if isinstance(F, PrimeField):
        return RoughInvariants(k, len(nonzero), None, 1 if F.is_square(prod) else -1)
    pos = sum(1 for d in nonzero if d > 0)
    neg = len(nonzero) - pos
    return RoughInvariants(k, len(nonzero), (pos, neg, len(diag) - len(nonzero)), squarefree_part(prod))


def _same_square_class(F, a, b) -> bool:
    if isinstance(F, PrimeField):
        return F.is_square(a) == F.is_square(b)
    q = a / b
    if q < 0:
        return False
    num, den = q.numerator, q.denominator
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


def rough_compare(A: MSC, B: MSC, k: int, cap: int = DEFAULT_TRACE_FORM_CAP) -> str:
    """``"DefinitelyNotEquivalent"`` or ``"PossiblyEquivalent"`` from T_1..T_k.

    Compares rank, signature (rationals) and discriminant square class. Square
    classes are compared by an exact square test on the ratio, so no integer
    factoring is needed here.
    """
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    if A.m != B.m:
        raise DimensionMismatch(f"m={A.m} vs m={B.m}")
    check_trace_form_cap(A.m, k, cap)
    F = A.field
    for level in range(1, k + 1):
        da, nza, pa = _diagonal_data(A, level, cap)
        db, nzb, pb = _diagonal_data(B, level, cap)
        if len(nza) != len(nzb):
            return "DefinitelyNotEquivalent"
        if not isinstance(F, PrimeField):
            if sum(d > 0 for d in nza) != sum(d > 0 for d in nzb):
                return "DefinitelyNotEquivalent"
        if not _same_square_class(F, pa, pb):
            return "DefinitelyNotEquivalent"
    return "PossiblyEquivalent"
