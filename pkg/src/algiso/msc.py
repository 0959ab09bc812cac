"""Structure-constant matrices (MSCs) and the basis-change action on them.

An m-dimensional algebra with basis ``e_1..e_m`` is stored as an ``m x m^2``
matrix ``A`` where ``e_j * e_k = sum_i e_i A[i, j*m + k]`` (0-based). With
this layout ``u * v = A (u kron v)`` for coordinate columns ``u, v``, and the
j-th ``m x m`` column block ``A_j`` has ``(A_j)[i, k] = A^i_{jk}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import CapExceeded, DimensionMismatch, FieldMismatch
from .field import Field
from .linalg import Mat, hstack, inverse, kron, mul

DEFAULT_TRACE_FORM_CAP = 1024


class MSC:
    """Matrix of structure constants of an m-dimensional algebra."""

    __slots__ = ("m", "mat")

    def __init__(self, mat: Mat):
        m = mat.nrows
        if m < 1 or mat.ncols != m * m:
            raise DimensionMismatch(f"MSC must be m x m^2, got {mat.shape}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "mat", mat)

    def __setattr__(self, name, value):
        raise AttributeError("MSC is immutable")

    @classmethod
    def from_rows(cls, field: Field, rows):
        return cls(Mat(field, rows))

    @classmethod
    def from_table(cls, field: Field, m: int, table):
        """Build from ``{(j, k): [c_1, .., c_m]}`` giving ``e_j * e_k`` (0-based keys).

        Missing products are zero.
        """
        cols = [[field.zero] * m for _ in range(m * m)]
        for (j, k), coords in table.items():
            cols[j * m + k] = [field.coerce(c) for c in coords]
        return cls(Mat(field, [[cols[c][i] for c in range(m * m)] for i in range(m)]))

    @classmethod
    def zero(cls, field: Field, m: int):
        return cls(Mat.zeros(field, m, m * m))

    @property
    def field(self) -> Field:
        return self.mat.field

    def constant(self, i, j, k):
        """A^i_{jk}, 0-based."""
        return self.mat.rows[i][j * self.m + k]

    def __eq__(self, other):
        if not isinstance(other, MSC):
            return NotImplemented
        return self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return f"MSC(m={self.m}, {self.mat!r})"


def act(g: Mat, A: MSC) -> MSC:
    """Basis change ``g A (g^-1 kron g^-1)``."""
    if g.shape != (A.m, A.m):
        raise DimensionMismatch(f"g is {g.shape}, algebra has m={A.m}")
    if g.field != A.field:
        raise FieldMismatch(f"{g.field} vs {A.field}")
    h = inverse(g)
    return MSC(mul(mul(g, A.mat), kron(h, h)))


def blocks(A: MSC) -> list[Mat]:
    m = A.m
    return [A.mat.block(0, m, j * m, (j + 1) * m) for j in range(m)]


def from_blocks(bs) -> MSC:
    return MSC(hstack(bs))


def multiply(A: MSC, u: Mat, v: Mat) -> Mat:
    """Product of two elements given as coordinate columns."""
    if u.shape != (A.m, 1) or v.shape != (A.m, 1):
        raise DimensionMismatch(f"expected {A.m}x1 columns, got {u.shape}, {v.shape}")
    return mul(A.mat, kron(u, v))


def _as_mat(X) -> Mat:
    return X.mat if isinstance(X, MSC) else X


def tr1(X) -> Mat:
    """Row ``(sum_i X^i_{i1}, .., sum_i X^i_{im})`` for any ``m x m^2`` matrix."""
    X = _as_mat(X)
    m = X.nrows
    F = X.field
    vals = []
    for k in range(m):
        s = F.zero
        for i in range(m):
            s = F.add(s, X.rows[i][i * m + k])
        vals.append(s)
    return Mat._raw(F, (tuple(vals),), m)


def tr2(X) -> Mat:
    """Row ``(sum_i X^i_{1i}, .., sum_i X^i_{mi})`` for any ``m x m^2`` matrix."""
    X = _as_mat(X)
    m = X.nrows
    F = X.field
    vals = []
    for j in range(m):
        s = F.zero
        for i in range(m):
            s = F.add(s, X.rows[i][j * m + i])
        vals.append(s)
    return Mat._raw(F, (tuple(vals),), m)


def trace(M: Mat):
    F = M.field
    s = F.zero
    for i in range(M.nrows):
        s = F.add(s, M.rows[i][i])
    return s


def _ordered_product(mats, identity):
    out = identity
    for M in mats:
        out = mul(out, M)
    return out


def block_tensor_pow_row(A: MSC, k: int) -> list[Mat]:
    """Blocks ``A_{i1} A_{i2} .. A_{ik}`` over all multi-indices, lexicographic."""
    if k < 1:
        raise ValueError("k must be >= 1")
    bs = blocks(A)
    ident = Mat.identity(A.field, A.m)
    return [_ordered_product([bs[i] for i in idx], ident) for idx in product(range(A.m), repeat=k)]


# Block matrices "over Mat(m, F)": a Mat of size (p*m) x (q*m) viewed as p x q blocks.


def block_kron(X: Mat, Y: Mat, m: int) -> Mat:
    """Tensor product over Mat(m, F): block ((i,i'),(j,j')) is ``X_ij @ Y_i'j'``."""
    p, q = X.nrows // m, X.ncols // m
    p2, q2 = Y.nrows // m, Y.ncols // m
    xb = [[X.block(i * m, (i + 1) * m, j * m, (j + 1) * m) for j in range(q)] for i in range(p)]
    yb = [[Y.block(i * m, (i + 1) * m, j * m, (j + 1) * m) for j in range(q2)] for i in range(p2)]
    rows = []
    for i in range(p):
        for i2 in range(p2):
            row_blocks = [mul(xb[i][j], yb[i2][j2]) for j in range(q) for j2 in range(q2)]
            for r in range(m):
                rows.append(sum((b.rows[r] for b in row_blocks), ()))
    return Mat._raw(X.field, tuple(rows), q * q2 * m)


def tilde_trace(X: Mat, m: int) -> Mat:
    """Blockwise trace of a block matrix over Mat(m, F)."""
    p, q = X.nrows // m, X.ncols // m
    F = X.field
    rows = []
    for i in range(p):
        row = []
        for j in range(q):
            s = F.zero
            for d in range(m):
                s = F.add(s, X.rows[i * m + d][j * m + d])
            row.append(s)
        rows.append(tuple(row))
    return Mat._raw(F, tuple(rows), q)


@dataclass(frozen=True)
class TraceForm:
    k: int
    mat: Mat


def check_trace_form_cap(m: int, k: int, cap: int = DEFAULT_TRACE_FORM_CAP) -> int:
    n = m**k
    if n > cap:
        raise CapExceeded(f"T_{k} would be {n}x{n}, cap is {cap}")
    return n


def ttr_form(A: MSC, k: int, cap: int = DEFAULT_TRACE_FORM_CAP) -> TraceForm:
    """Trace quadratic form T_k of the algebra.

    Entry at ``((i1..ik), (j1..jk))`` is ``Tr(A_{i1}..A_{ik} A_{j1}..A_{jk})``:
    the blockwise trace of the column block power times the row block power.
    This is symmetric by cyclicity of the trace and transforms by congruence
    with ``(g^-1)^{kron k}`` under :func:`act`. For ``k = 1`` it is the Gram
    matrix ``Tr(A_i A_j)``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = check_trace_form_cap(A.m, k, cap)
    words = block_tensor_pow_row(A, k)
    F = A.field
    # Tr(XY) = sum_{a,b} X[a][b] * Y[b][a]; flatten Y^T once per word.
    flat = [w.entries() for w in words]
    flat_t = [w.T.entries() for w in words]
    rows = tuple(tuple(F.dot(fa, fb) for fb in flat_t) for fa in flat)
    return TraceForm(k, Mat._raw(F, rows, n))


def t1(A: MSC) -> Mat:
    return ttr_form(A, 1).mat
