"""Dense exact matrices over a :class:`~algiso.field.Field`.

Entries are kept row-major as tuples of raw field values. Every operation
returns a new matrix; nothing is mutated after construction.
"""

from __future__ import annotations

from itertools import product

from .errors import DimensionMismatch, FieldMismatch, NotSymmetric, SingularMatrix
from .field import Field, Scalar


class Mat:
    __slots__ = ("field", "nrows", "ncols", "rows", "_hash")

    def __init__(self, field: Field, rows, ncols: int | None = None):
        coerce = field.coerce
        rows = tuple(tuple(coerce(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        self._init(field, rows, ncols)

    def _init(self, field, rows, ncols):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, field, rows, ncols):
        # Trusted constructor: rows already hold canonical raw values.
        self = object.__new__(cls)
        self._init(field, rows, ncols)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    # construction helpers

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls._raw(field, tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls._raw(
            field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def diag(cls, field, values):
        values = [field.coerce(v) for v in values]
        n = len(values)
        z = field.zero
        return cls._raw(
            field,
            tuple(tuple(values[i] if i == j else z for j in range(n)) for i in range(n)),
            n,
        )

    @classmethod
    def row(cls, field, values):
        return cls(field, [values])

    @classmethod
    def column(cls, field, values):
        return cls(field, [[v] for v in values])

    # basic protocol

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def scalar(self, i, j) -> Scalar:
        return Scalar(self.field, self.rows[i][j])

    def entries(self):
        """Row-major flat tuple of raw values."""
        return tuple(x for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.field, self.ncols, self.rows)))
        return self._hash

    def __repr__(self):
        fmt = self.field.format
        body = "; ".join(" ".join(fmt(x) for x in r) for r in self.rows)
        return f"Mat[{self.field!r}]({self.nrows}x{self.ncols}: {body})"

    def tolist(self):
        """Nested lists of canonical strings."""
        fmt = self.field.format
        return [[fmt(x) for x in r] for r in self.rows]

    # arithmetic

    def _check_field(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        add = self.field.add
        rows = tuple(
            tuple(add(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
        )
        return Mat._raw(self.field, rows, self.ncols)

    def __sub__(self, other):
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        sub = self.field.sub
        rows = tuple(
            tuple(sub(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
        )
        return Mat._raw(self.field, rows, self.ncols)

    def __neg__(self):
        neg = self.field.neg
        return Mat._raw(self.field, tuple(tuple(neg(a) for a in r) for r in self.rows), self.ncols)

    def scale(self, c):
        c = self.field.coerce(c)
        mul = self.field.mul
        return Mat._raw(
            self.field, tuple(tuple(mul(c, a) for a in r) for r in self.rows), self.ncols
        )

    def __matmul__(self, other):
        return mul(self, other)

    @property
    def T(self):
        rows = tuple(zip(*self.rows)) if self.nrows else ((),) * self.ncols
        return Mat._raw(self.field, rows, self.nrows)

    # slicing and stacking

    def block(self, r0, r1, c0, c1):
        return Mat._raw(self.field, tuple(r[c0:c1] for r in self.rows[r0:r1]), c1 - c0)

    def is_square(self):
        return self.nrows == self.ncols

    def is_symmetric(self):
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.nrows)
        )

    def is_diagonal(self):
        return self.is_square() and all(
            self.rows[i][j] == 0
            for i in range(self.nrows)
            for j in range(self.ncols)
            if i != j
        )

    def diagonal(self):
        return tuple(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))


def hstack(mats):
    mats = list(mats)
    field = mats[0].field
    if any(M.field != field for M in mats):
        raise FieldMismatch("hstack over different fields")
    if any(M.nrows != mats[0].nrows for M in mats):
        raise DimensionMismatch("hstack needs equal row counts")
    rows = tuple(sum((M.rows[i] for M in mats), ()) for i in range(mats[0].nrows))
    return Mat._raw(field, rows, sum(M.ncols for M in mats))


def vstack(mats):
    mats = list(mats)
    field = mats[0].field
    if any(M.field != field for M in mats):
        raise FieldMismatch("vstack over different fields")
    if any(M.ncols != mats[0].ncols for M in mats):
        raise DimensionMismatch("vstack needs equal column counts")
    return Mat._raw(field, sum((M.rows for M in mats), ()), mats[0].ncols)


def mul(A: Mat, B: Mat) -> Mat:
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    if A.ncols != B.nrows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    dot = A.field.dot
    if not B.rows:
        z = A.field.zero
        return Mat._raw(A.field, tuple((z,) * B.ncols for _ in A.rows), B.ncols)
    cols = tuple(zip(*B.rows))
    rows = tuple(tuple(dot(r, c) for c in cols) for r in A.rows)
    return Mat._raw(A.field, rows, B.ncols)


def kron(A: Mat, B: Mat) -> Mat:
    """Block Kronecker product: block (i, j) of the result is ``a_ij * B``."""
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    m = A.field.mul
    rows = tuple(
        tuple(m(a, b) for a in ra for b in rb) for ra in A.rows for rb in B.rows
    )
    return Mat._raw(A.field, rows, A.ncols * B.ncols)


def kron_pow(A: Mat, k: int) -> Mat:
    if k < 0:
        raise ValueError("negative Kronecker power")
    result = Mat.identity(A.field, 1)
    for _ in range(k):
        result = kron(result, A)
    return result


def _echelon(A: Mat, augment: Mat | None = None):
    """Reduced row echelon form with optional right-hand block.

    Returns (rows, pivot_columns, augmented_rows). Pivot search picks the
    first nonzero entry at or below the current row.
    """
    F = A.field
    rows = [list(r) for r in A.rows]
    aug = [list(r) for r in augment.rows] if augment is not None else None
    pivots = []
    r = 0
    for c in range(A.ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            if aug is not None:
                aug[r], aug[piv] = aug[piv], aug[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        if aug is not None:
            aug[r] = [F.mul(inv, x) for x in aug[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
                if aug is not None:
                    aug[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    return rows, pivots, aug


def rank(A: Mat) -> int:
    return len(_echelon(A)[1])


def inverse(A: Mat) -> Mat:
    if not A.is_square():
        raise DimensionMismatch(f"inverse of non-square {A.shape}")
    n = A.nrows
    _, pivots, aug = _echelon(A, Mat.identity(A.field, n))
    if len(pivots) < n:
        raise SingularMatrix(f"matrix has rank {len(pivots)} < {n}")
    return Mat._raw(A.field, tuple(tuple(r) for r in aug), n)


def det(A: Mat):
    """Determinant as a raw field value."""
    if not A.is_square():
        raise DimensionMismatch(f"determinant of non-square {A.shape}")
    F = A.field
    rows = [list(r) for r in A.rows]
    n = len(rows)
    d = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return F.zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = F.neg(d)
        p = rows[c][c]
        d = F.mul(d, p)
        inv = F.inv(p)
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = F.mul(rows[i][c], inv)
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[c])]
    return d


def congruence_diagonalize(S: Mat):
    """Return ``(Q, D)`` with ``(Q^-1)^T S Q^-1 == D`` diagonal.

    Pivots are scanned in index order. A zero pivot at ``i`` with some
    ``S[i][j] != 0`` (smallest ``j > i``) is repaired by adding column/row
    ``j`` to ``i``; if that would cancel (``S[j][j] == -2 S[i][j]``) the
    column is subtracted instead, giving ``-4 S[i][j]``. Both need
    characteristic != 2. Already-diagonal input gives ``Q = I``.
    """
    if not S.is_square():
        raise DimensionMismatch(f"congruence of non-square {S.shape}")
    if not S.is_symmetric():
        raise NotSymmetric("congruence_diagonalize needs a symmetric matrix")
    F = S.field
    n = S.nrows
    s = [list(r) for r in S.rows]
    # E accumulates the column operations: E^T S E = D, so Q = E^-1.
    e = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]

    def add_col(dst, src, c):
        # column dst += c * column src, applied as a congruence on s
        for r in range(n):
            s[r][dst] = F.add(s[r][dst], F.mul(c, s[r][src]))
        for r in range(n):
            s[dst][r] = F.add(s[dst][r], F.mul(c, s[src][r]))
        for r in range(n):
            e[r][dst] = F.add(e[r][dst], F.mul(c, e[r][src]))

    for i in range(n):
        if s[i][i] == 0:
            j = next((j for j in range(i + 1, n) if s[i][j] != 0), None)
            if j is None:
                continue
            sign = F.one
            if F.add(s[j][j], F.add(s[i][j], s[i][j])) == 0:
                sign = F.neg(F.one)
            add_col(i, j, sign)
        d_inv = F.inv(s[i][i])
        for j in range(i + 1, n):
            if s[i][j] != 0:
                add_col(j, i, F.neg(F.mul(s[i][j], d_inv)))

    D = Mat._raw(F, tuple(tuple(r) for r in s), n)
    E = Mat._raw(F, tuple(tuple(r) for r in e), n)
    return inverse(E), D


def multi_indices(m: int, k: int):
    """Lexicographic multi-indices, leftmost most significant (Kronecker order)."""
    return list(product(range(m), repeat=k))
