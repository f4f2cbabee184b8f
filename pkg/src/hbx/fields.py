"""Exact scalar fields: the rationals and prime fields.

Matrices are stored as an integer numpy array together with a single
positive integer denominator.  Over a prime field the denominator is always
1 and the entries are residues in ``[0, p)``.  Integer arrays use ``int64``
while that is provably safe and fall back to Python integers (``object``
dtype) otherwise, so no operation ever rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Union

import numpy as np

from .errors import FieldMismatch, InvalidInput, NotInvertible

_INT64_SAFE = 2**62

Number = Union[int, Fraction]


def is_prime(n: int) -> bool:
    """Trial division."""
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
    """Base class of the two supported fields."""

    char: int = 0

    def __call__(self, value) -> "Scalar":
        return Scalar(self, self.coerce(value))

    def coerce(self, value) -> Number:
        raise NotImplementedError

    def parse(self, text) -> Number:
        """Parse an int, a Fraction or a ``"num/den"`` string."""
        if isinstance(text, bool):
            raise InvalidInput(f"invalid scalar {text!r}")
        if isinstance(text, (int, Fraction)):
            return self.coerce(text)
        if isinstance(text, str):
            s = text.strip()
            try:
                if "/" in s:
                    n, d = s.split("/")
                    n, d = int(n), int(d)
                else:
                    n, d = int(s), 1
            except ValueError:
                raise InvalidInput(f"invalid scalar {text!r}") from None
            if d == 0:
                raise InvalidInput(f"zero denominator in scalar {text!r}")
            return self.coerce(Fraction(n, d))
        raise InvalidInput(f"invalid scalar {text!r}")

    # array helpers, overridden per field
    def normalize(self, num: np.ndarray, den: int) -> tuple[np.ndarray, int]:
        raise NotImplementedError

    def from_values(self, values) -> tuple[np.ndarray, int]:
        raise NotImplementedError

    def to_value(self, n, den: int) -> Number:
        raise NotImplementedError

    def format(self, value: Number) -> str:
        return str(value)


@dataclass(frozen=True)
class Rationals(Field):
    char: int = 0

    def __repr__(self):
        return "Q"

    def coerce(self, value) -> Fraction:
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field!r} scalar used over Q")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        return Fraction(value)

    def normalize(self, num, den):
        if den < 0:
            num, den = -num, -den
        if num.size == 0:
            return num, 1
        if num.dtype == object:
            g = reduce(math.gcd, (int(v) for v in num.flat), den)
        else:
            g = math.gcd(int(np.gcd.reduce(num, axis=None)), den)
        if g > 1:
            num = num // g
            den //= g
        return _shrink(num), den

    def from_values(self, values):
        fr = np.vectorize(self.coerce, otypes=[object])(np.asarray(values, dtype=object))
        den = reduce(_lcm, (f.denominator for f in fr.flat), 1)
        num = np.vectorize(lambda f: f.numerator * (den // f.denominator), otypes=[object])(fr)
        return self.normalize(_shrink(num), den)

    def to_value(self, n, den):
        return Fraction(int(n), den)

    def format(self, value):
        value = Fraction(value)
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int = 2

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidInput(f"{self.p} is not prime")

    @property
    def char(self):
        return self.p

    def __repr__(self):
        return f"F{self.p}"

    def coerce(self, value) -> int:
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field!r} scalar used over {self!r}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise InvalidInput(f"{value} has no image in F{self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def normalize(self, num, den):
        if den != 1:
            num = num * pow(den, -1, self.p)
        return _shrink(num % self.p), 1

    def from_values(self, values):
        arr = np.vectorize(self.coerce, otypes=[object])(np.asarray(values, dtype=object))
        return _shrink(arr), 1

    def to_value(self, n, den):
        return int(n) * pow(den, -1, self.p) % self.p

    def format(self, value):
        return str(int(value))


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(v)) for v in a.flat)
    return int(np.abs(a).max())


def _shrink(a: np.ndarray) -> np.ndarray:
    """Return an int64 array when every entry fits comfortably, else object."""
    if a.dtype == np.int64:
        return a
    if a.size == 0 or _maxabs(a) < _INT64_SAFE:
        return np.asarray(a, dtype=np.int64) if a.size else a.astype(np.int64)
    return a.astype(object)


def tensordot(a: np.ndarray, b: np.ndarray, axes) -> np.ndarray:
    """Exact integer tensordot; widens to Python ints when int64 could overflow."""
    ia, ib = axes
    inner = a.shape[ia] if a.ndim else 1
    if a.dtype == object or b.dtype == object or _maxabs(a) * _maxabs(b) * max(inner, 1) >= _INT64_SAFE:
        return np.tensordot(a.astype(object), b.astype(object), axes=axes)
    return np.tensordot(a, b, axes=axes)


def multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact elementwise product with broadcasting."""
    if a.dtype == object or b.dtype == object or _maxabs(a) * _maxabs(b) >= _INT64_SAFE:
        return a.astype(object) * b.astype(object)
    return a * b


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field."""

    field: Field
    value: Number

    def _other(self, other) -> Number:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return self.field(self.value + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.field(self.value - self._other(other))

    def __rsub__(self, other):
        return self.field(self._other(other) - self.value)

    def __mul__(self, other):
        return self.field(self.value * self._other(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self.field(-self.value)

    def inverse(self) -> "Scalar":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        if isinstance(self.field, PrimeField):
            return self.field(pow(self.value, -1, self.field.p))
        return self.field(1 / Fraction(self.value))

    def __truediv__(self, other):
        return self * self.field(other).inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if isinstance(self.field, PrimeField):
            return self.field(pow(self.value, k, self.field.p))
        return self.field(Fraction(self.value) ** k)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __repr__(self):
        return self.field.format(self.value)


def gauss_jordan(field: Field, rows: list[list[Number]], ncols: int) -> tuple[list[list[Number]], list[int]]:
    """Reduced row echelon form of an augmented system.

    ``rows`` holds field values (already coerced).  The first ``ncols``
    columns are eliminated; returns the reduced rows and the pivot columns.
    """
    rows = [list(r) for r in rows]
    if isinstance(field, PrimeField):
        p = field.p

        def inv(x):
            return pow(x, -1, p)

        def red(x):
            return x % p
    else:

        def inv(x):
            return 1 / Fraction(x)

        def red(x):
            return x

    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = inv(rows[r][col])
        rows[r] = [red(v * s) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [red(a - f * b) for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def invert_values(field: Field, mat: list[list[Number]]) -> list[list[Number]]:
    """Exact inverse of a square matrix of field values."""
    n = len(mat)
    if any(len(r) != n for r in mat):
        raise NotInvertible("matrix is not square")
    aug = [list(mat[i]) + [field.coerce(1 if i == j else 0) for j in range(n)] for i in range(n)]
    rows, pivots = gauss_jordan(field, aug, n)
    if len(pivots) < n:
        raise NotInvertible("matrix is singular")
    return [r[n:] for r in rows[:n]]


def solve_values(field: Field, a: list[list[Number]], b: list[Number]) -> list[Number] | None:
    """One solution of ``a x = b`` (free variables set to zero), or None."""
    ncols = len(a[0]) if a else 0
    aug = [list(r) + [bv] for r, bv in zip(a, b)]
    rows, pivots = gauss_jordan(field, aug, ncols)
    for r in rows[len(pivots):]:
        if r[ncols] != 0:
            return None
    x = [field.coerce(0)] * ncols
    for r, col in zip(rows, pivots):
        x[col] = r[ncols]
    return x


Q = Rationals()
