"""Random sampling and an exhaustive isomorphism oracle over small prime fields.

The oracle deliberately does not use :func:`algiso.msc.act`: it tests
``g A == B (g kron g)`` with plain integer arithmetic mod p, which is the
same relation as ``act(g, A) == B`` without any inversion.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .errors import CapExceeded, DimensionMismatch, FieldMismatch, WrongField
from .field import Field, PrimeField
from .linalg import Mat, det
from .msc import MSC
from .separate import Equivalent, NotEquivalent

DEFAULT_GL_CAP = 10**6


@dataclass(frozen=True)
class RngSpec:
    """Seed plus entry bound. ``entry_bound=None`` means uniform residues over GF(p)
    and the default bound 3 over the rationals."""

    seed: int
    entry_bound: int | None = None

    def generator(self) -> random.Random:
        return random.Random(self.seed)


def _resolve(rng, bound):
    if isinstance(rng, RngSpec):
        return rng.generator(), rng.entry_bound if bound is None else bound
    return rng, bound


def _sampler(field: Field, gen: random.Random, bound):
    if isinstance(field, PrimeField):
        p = field.p
        if bound is None or 2 * bound + 1 >= p:
            return lambda: gen.randrange(p)
        return lambda: gen.randint(-bound, bound) % p
    if bound is None:
        bound = 3
    return lambda: field.coerce(gen.randint(-bound, bound))


def random_algebra(m: int, field: Field, rng, bound: int | None = None) -> MSC:
    """Random MSC. ``rng`` is an :class:`RngSpec` or a ``random.Random``.

    Over GF(p) entries are uniform residues unless a bound smaller than
    ``(p - 1) / 2`` is given; over the rationals they are integers in
    ``[-bound, bound]``.
    """
    gen, bound = _resolve(rng, bound)
    draw = _sampler(field, gen, bound)
    return MSC(Mat._raw(field, tuple(tuple(draw() for _ in range(m * m)) for _ in range(m)), m * m))


def random_gl(m: int, field: Field, rng, bound: int | None = None) -> Mat:
    """Random invertible matrix by rejection on ``det == 0``."""
    gen, bound = _resolve(rng, bound)
    if bound == 0:
        raise ValueError("bound 0 admits no invertible matrix")
    draw = _sampler(field, gen, bound)
    while True:
        g = Mat._raw(field, tuple(tuple(draw() for _ in range(m)) for _ in range(m)), m)
        if det(g) != 0:
            return g


def gl_order(m: int, p: int) -> int:
    n = 1
    for i in range(m):
        n *= p**m - p**i
    return n


def _is_witness(g, a, b, m, p):
    # g A == B (g kron g), entrywise mod p; bail out at the first mismatch.
    for i in range(m):
        gi = g[i]
        bi = b[i]
        for j in range(m):
            for k in range(m):
                lhs = sum(gi[r] * a[r][j * m + k] for r in range(m))
                rhs = 0
                for s in range(m):
                    gsj = g[s][j]
                    if gsj:
                        for t in range(m):
                            rhs += bi[s * m + t] * gsj * g[t][k]
                if (lhs - rhs) % p:
                    return False
    return True


def _det_mod(g, p):
    rows = [list(r) for r in g]
    n = len(rows)
    d = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = -d
        d = d * rows[c][c] % p
        inv = pow(rows[c][c], -1, p)
        for i in range(c + 1, n):
            f = rows[i][c] * inv % p
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[c])]
    return d % p


def enumerate_gl(m: int, p: int):
    """All invertible m x m matrices over GF(p), lexicographic in row-major entries."""
    for flat in product(range(p), repeat=m * m):
        g = [flat[i * m:(i + 1) * m] for i in range(m)]
        if _det_mod(g, p):
            yield g


def brute_force_equivalent(A: MSC, B: MSC, cap: int = DEFAULT_GL_CAP):
    """Search GL(m, p) in :func:`enumerate_gl` order for ``g`` with ``act(g, A) == B``."""
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    if not isinstance(A.field, PrimeField):
        raise WrongField("exhaustive search needs a prime field")
    if A.m != B.m:
        raise DimensionMismatch(f"m={A.m} vs m={B.m}")
    m, p = A.m, A.field.p
    if gl_order(m, p) > cap:
        raise CapExceeded(f"|GL({m},{p})| = {gl_order(m, p)} exceeds cap {cap}")
    a, b = A.mat.rows, B.mat.rows
    for g in enumerate_gl(m, p):
        if _is_witness(g, a, b, m, p):
            return Equivalent(Mat(A.field, g))
    return NotEquivalent()
