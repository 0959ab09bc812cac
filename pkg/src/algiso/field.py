"""Exact scalar fields of characteristic other than 2.

Two kinds are supported: the rationals (backed by :class:`fractions.Fraction`)
and prime fields ``F_p`` for odd primes ``p`` (backed by canonical ``int``
residues ``0..p-1``).

Matrices store *raw* values (``Fraction`` or ``int``) and route arithmetic
through the owning field object; :class:`Scalar` wraps a raw value together
with its field for standalone use.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Integral, Rational

from .errors import FieldMismatch, ParseError

_RATIONAL_TEXT = re.compile(r"^-?\d+(/\d+)?$")
_INTEGER_TEXT = re.compile(r"^-?\d+$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface. Subclasses supply canonical raw values."""

    kind: str
    zero: object
    one: object

    def __call__(self, value) -> "Scalar":
        return Scalar(self, self.coerce(value))

    def coerce(self, value):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def dot(self, xs, ys):
        """Exact inner product of two equal-length raw sequences."""
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


class RationalField(Field):
    kind = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in {self}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (Integral, Rational)):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def dot(self, xs, ys):
        # Summing over a common denominator avoids a gcd per partial sum.
        num = 0
        den = 1
        for x, y in zip(xs, ys):
            if x and y:
                d = x.denominator * y.denominator
                num = num * d + x.numerator * y.numerator * den
                den *= d
        return Fraction(num, den)

    def parse(self, text: str):
        text = text.strip()
        if not _RATIONAL_TEXT.match(text):
            raise ParseError(f"not a rational literal: {text!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {text!r}") from None

    def format(self, a) -> str:
        return str(a)

    def to_json(self) -> dict:
        return {"kind": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    kind = "prime"
    zero = 0
    one = 1

    def __init__(self, p: int):
        if not isinstance(p, Integral) or not is_prime(int(p)) or p == 2:
            raise ValueError(f"prime fields need an odd prime, got {p!r}")
        self.p = int(p)

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in {self}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Integral):
            return int(value) % self.p
        if isinstance(value, Rational):
            return int(value.numerator) * pow(int(value.denominator), -1, self.p) % self.p
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def dot(self, xs, ys):
        return sum(x * y for x, y in zip(xs, ys)) % self.p

    def parse(self, text: str):
        text = text.strip()
        if not _INTEGER_TEXT.match(text):
            raise ParseError(f"not an integer residue: {text!r}")
        return int(text) % self.p

    def format(self, a) -> str:
        return str(a)

    def to_json(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def is_square(self, a) -> bool:
        """Quadratic-residue test by Euler's criterion (zero counts as a square)."""
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(obj) -> Field:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError(f"bad field description: {obj!r}")
    if obj["kind"] == "rational":
        return QQ
    if obj["kind"] == "prime":
        p = obj.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParseError(f"prime field needs integer 'p', got {p!r}")
        try:
            return GF(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"unknown field kind {obj['kind']!r}")


def field_from_text(text: str) -> Field:
    """Parse ``rational``/``QQ`` or ``prime:<p>``/``GF(<p>)``."""
    t = text.strip()
    if t.lower() in ("rational", "q", "qq"):
        return QQ
    m = re.match(r"^(?:prime:|gf\(|f)?(\d+)\)?$", t, re.IGNORECASE)
    if m:
        try:
            return GF(int(m.group(1)))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"unknown field {text!r}")


class Scalar:
    """Immutable element of a :class:`Field`."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.coerce(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inv(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, ParseError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field!r}({self.field.format(self.value)})"
