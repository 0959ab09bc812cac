"""Exact isomorphism testing for finite-dimensional generic algebras.

Algebras are given by their structure constants. The package computes trace
quadratic forms, a normal form under congruence, covariant frames, and from
them a complete set of basis-independent invariants, so that isomorphism can
be decided and certified by an explicit change of basis.
"""

from .errors import (
    AlgisoError,
    CapExceeded,
    DimensionMismatch,
    FieldMismatch,
    FrameDeficient,
    InternalInconsistency,
    NotInV0,
    NotSymmetric,
    ParseError,
    SingularMatrix,
    WrongField,
)
from .field import GF, QQ, Field, PrimeField, RationalField, Scalar
from .frame import Frame, build_frame, covariant_row
from .linalg import Mat, congruence_diagonalize, det, inverse, kron, kron_pow, rank
from .msc import MSC, TraceForm, act, blocks, multiply, tr1, tr2, ttr_form
from .normalize import NormalizedAlgebra, in_v0, normalize
from .separate import (
    Equivalent,
    InvariantPair,
    NotEquivalent,
    OutOfScope,
    RoughInvariants,
    compare,
    invariants,
    rough_compare,
    rough_invariants,
)

__version__ = "0.1.0"
