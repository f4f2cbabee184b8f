"""Based graded objects, exact morphisms and the braided monoidal operations.

Objects of the ambient category are finite-dimensional based spaces whose
basis vectors carry a degree in ``Z/N``.  The braiding is diagonal:
``c(e_i (x) e_j) = q**(deg i * deg j) e_j (x) e_i``.  Under ``Swap`` all
degrees are zero and ``q = 1``.

Tensor products are strict.  A product object remembers its atomic
factors (its *wires*), and the unit object has no wires at all, so
``K (x) A`` and ``A`` are literally the same wire list.  The basis of
``X (x) Y`` is ordered row-major: ``(i, j) -> i * dim Y + j``.

Morphisms compose with ``@`` (``g @ f`` is ``g o f``) and tensor with ``|``.
Both operators build a lazy expression; :func:`evaluate` contracts it one
layer at a time without ever materialising a whiskered identity, which
keeps checks on threefold and fourfold tensor powers cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import prod
from typing import Sequence

import numpy as np

from . import fields as F
from .errors import BraidMismatch, DegreeError, FieldMismatch, InvalidInput, NotInvertible, ShapeMismatch
from .fields import Field, Scalar


@dataclass(frozen=True)
class BraidSpec:
    """Diagonal braiding backend: ``swap`` or ``bicharacter(N, q)``."""

    kind: str
    modulus: int = 1
    q: Scalar | None = None

    @classmethod
    def swap(cls) -> "BraidSpec":
        return cls("swap")

    @classmethod
    def bicharacter(cls, modulus: int, q: Scalar) -> "BraidSpec":
        if modulus < 1:
            raise InvalidInput("bicharacter modulus must be positive")
        if q ** modulus != 1:
            raise InvalidInput(f"q = {q} is not a {modulus}-th root of unity")
        return cls("bicharacter", modulus, q)

    @classmethod
    def sign(cls, field: Field) -> "BraidSpec":
        return cls.bicharacter(2, field(-1))

    @property
    def field(self) -> Field | None:
        return None if self.q is None else self.q.field

    def symmetric(self) -> bool:
        return self.kind == "swap" or self.q * self.q == 1

    def kappa(self, dx: Sequence[int], dy: Sequence[int], field: Field) -> np.ndarray:
        """Integer table ``q**(dx[i] * dy[j])`` of braiding coefficients."""
        if self.kind == "swap":
            return np.ones((len(dx), len(dy)), dtype=np.int64)
        powers = [(self.q ** k).value for k in range(self.modulus)]
        e = np.outer(np.asarray(dx, dtype=np.int64), np.asarray(dy, dtype=np.int64)) % self.modulus
        table = np.array([int(v) for v in powers], dtype=np.int64)
        return table[e]

    def __repr__(self):
        if self.kind == "swap":
            return "Swap"
        return f"Bicharacter({self.modulus}, {self.q})"


@dataclass(frozen=True, eq=False)
class FinObject:
    """A based object: one degree per basis vector."""

    grading: tuple[int, ...]
    braid: BraidSpec
    field: Field
    factors: tuple["FinObject", ...] = ()
    name: str = dc_field(default="", compare=False)

    def __post_init__(self):
        if len(self.grading) == 0:
            raise InvalidInput("objects must have positive dimension")
        n = self.braid.modulus
        if any(not 0 <= g < n for g in self.grading):
            raise InvalidInput(f"grading entries must lie in [0, {n})")
        if self.braid.field is not None and self.braid.field != self.field:
            raise FieldMismatch("braiding parameter lives in another field")

    @property
    def dim(self) -> int:
        return len(self.grading)

    @property
    def is_unit(self) -> bool:
        return self.grading == (0,)

    @property
    def wires(self) -> tuple["FinObject", ...]:
        if self.is_unit:
            return ()
        return self.factors or (self,)

    def __eq__(self, other):
        if not isinstance(other, FinObject):
            return NotImplemented
        return (self.grading, self.braid, self.field) == (other.grading, other.braid, other.field)

    def __hash__(self):
        return hash((self.grading, self.braid, self.field))

    def __repr__(self):
        label = self.name or "X"
        return f"{label}[dim={self.dim}]"

    def __or__(self, other):
        return Tensor([Id(self), _expr(other)])

    def __ror__(self, other):
        return Tensor([_expr(other), Id(self)])

    def __matmul__(self, other):
        return Compose([_expr(other), Id(self)])

    def __pow__(self, k: int) -> "FinObject":
        out = unit_object(self.field, self.braid)
        for _ in range(k):
            out = tensor_objects(out, self)
        return out


def make_object(dim: int, field: Field = F.Q, braid: BraidSpec | None = None,
                grading: Sequence[int] | None = None, name: str = "") -> FinObject:
    braid = braid or BraidSpec.swap()
    grading = tuple(int(g) for g in grading) if grading is not None else (0,) * dim
    if len(grading) != dim:
        raise InvalidInput(f"grading has length {len(grading)}, expected {dim}")
    return FinObject(grading, braid, field, (), name)


def unit_object(field: Field = F.Q, braid: BraidSpec | None = None) -> FinObject:
    return FinObject((0,), braid or BraidSpec.swap(), field, (), "K")


def _same_backend(x: FinObject, y: FinObject) -> None:
    if x.field != y.field:
        raise FieldMismatch(f"{x.field!r} vs {y.field!r}")
    if x.braid != y.braid:
        raise BraidMismatch(f"{x.braid!r} vs {y.braid!r}")


def tensor_objects(x: FinObject, y: FinObject) -> FinObject:
    _same_backend(x, y)
    wires = x.wires + y.wires
    if not wires:
        return unit_object(x.field, x.braid)
    if len(wires) == 1:
        return wires[0]
    n = x.braid.modulus
    grading = tuple((a + b) % n for a in x.grading for b in y.grading)
    name = "⊗".join(w.name or "X" for w in wires)
    return FinObject(grading, x.braid, x.field, wires, name)


class Expr:
    """A lazily composed string diagram with a source and a target."""

    src: FinObject
    dst: FinObject

    def __matmul__(self, other):
        return Compose([_expr(other), self])

    def __rmatmul__(self, other):
        return Compose([self, _expr(other)])

    def __or__(self, other):
        return Tensor([self, _expr(other)])

    def __ror__(self, other):
        return Tensor([_expr(other), self])

    def evaluate(self) -> "Morphism":
        return evaluate(self)

    def _steps(self, left: int, right: int) -> list:
        raise NotImplementedError


def _expr(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, FinObject):
        return Id(x)
    raise TypeError(f"cannot use {type(x).__name__} in a diagram")


class Id(Expr):
    def __init__(self, obj: FinObject):
        self.src = self.dst = obj

    def _steps(self, left, right):
        return []


class Braid(Expr):
    """Lazy braiding ``c_{X,Y}``."""

    def __init__(self, x: FinObject, y: FinObject):
        _same_backend(x, y)
        self.x, self.y = x, y
        self.src = tensor_objects(x, y)
        self.dst = tensor_objects(y, x)

    def _steps(self, left, right):
        if self.x.is_unit or self.y.is_unit:
            return []
        kappa = self.x.braid.kappa(self.x.grading, self.y.grading, self.x.field)
        return [("braid", left, right, kappa)]


class Compose(Expr):
    """Composite of ``parts`` in application order (first part acts first)."""

    def __init__(self, parts: Sequence[Expr]):
        flat: list[Expr] = []
        for p in parts:
            flat.extend(p.parts if isinstance(p, Compose) else [p])
        for f, g in zip(flat, flat[1:]):
            if f.dst != g.src:
                raise ShapeMismatch(f"cannot compose: {f.dst!r} -> {g.src!r}")
        self.parts = flat
        self.src = flat[0].src
        self.dst = flat[-1].dst

    def _steps(self, left, right):
        out = []
        for p in self.parts:
            out.extend(p._steps(left, right))
        return out


class Tensor(Expr):
    def __init__(self, items: Sequence[Expr]):
        flat: list[Expr] = []
        for it in items:
            flat.extend(it.items if isinstance(it, Tensor) else [it])
        for a in flat[1:]:
            _same_backend(flat[0].src, a.src)
        self.items = flat
        src = dst = unit_object(flat[0].src.field, flat[0].src.braid)
        for it in flat:
            src = tensor_objects(src, it.src)
            dst = tensor_objects(dst, it.dst)
        self.src, self.dst = src, dst

    def _steps(self, left, right):
        out = []
        for k, it in enumerate(self.items):
            lk = left * prod(a.dst.dim for a in self.items[:k])
            rk = right * prod(a.src.dim for a in self.items[k + 1:])
            out.extend(it._steps(lk, rk))
        return out


class Morphism(Expr):
    """An exact ``dst.dim x src.dim`` matrix between based objects.

    ``num / den`` is the matrix; over a prime field ``den == 1``.
    """

    __slots__ = ("src", "dst", "num", "den")

    def __init__(self, src: FinObject, dst: FinObject, entries, *, check: bool = True):
        _same_backend(src, dst)
        num, den = src.field.from_values(np.asarray(entries, dtype=object).reshape(dst.dim, src.dim))
        self.src, self.dst, self.num, self.den = src, dst, num, den
        if check:
            self.check_degree()

    @classmethod
    def raw(cls, src: FinObject, dst: FinObject, num: np.ndarray, den: int = 1) -> "Morphism":
        m = object.__new__(cls)
        m.src, m.dst = src, dst
        m.num, m.den = src.field.normalize(num.reshape(dst.dim, src.dim), den)
        return m

    @property
    def field(self) -> Field:
        return self.src.field

    @property
    def shape(self) -> tuple[int, int]:
        return (self.dst.dim, self.src.dim)

    def check_degree(self) -> None:
        gd = np.asarray(self.dst.grading)[:, None]
        gs = np.asarray(self.src.grading)[None, :]
        bad = np.argwhere((self.num != 0) & (gd != gs))
        if len(bad):
            i, j = bad[0]
            raise DegreeError(f"entry ({i}, {j}) maps degree {gs[0, j]} to degree {gd[i, 0]}")

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self.field.to_value(self.num[i, j], self.den))

    def values(self) -> list[list]:
        """Matrix entries as exact field values (Fraction or residue)."""
        return [[self.field.to_value(v, self.den) for v in row] for row in self.num]

    def is_zero(self) -> bool:
        return not np.any(self.num != 0)

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.src == other.src and self.dst == other.dst and self.den == other.den
                and np.array_equal(self.num, other.num))

    __hash__ = None

    def __add__(self, other: "Morphism") -> "Morphism":
        return _linear(self, other, 1)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return _linear(self, other, -1)

    def scale(self, s) -> "Morphism":
        s = self.field(s)
        if isinstance(s.value, int):
            return Morphism.raw(self.src, self.dst, F.multiply(self.num, np.array(s.value)), self.den)
        fr = s.value
        return Morphism.raw(self.src, self.dst, F.multiply(self.num, np.array(fr.numerator)),
                            self.den * fr.denominator)

    def with_entry(self, i: int, j: int, value) -> "Morphism":
        """Copy with one entry replaced (no degree check: used to build mutants)."""
        vals = np.array(self.values(), dtype=object)
        vals[i, j] = self.field.coerce(value)
        return Morphism(self.src, self.dst, vals, check=False)

    def _steps(self, left, right):
        return [("mat", left, right, self.num, self.den)]

    def __repr__(self):
        return f"Morphism({self.src!r} -> {self.dst!r})"


def _linear(a: Morphism, b: Morphism, sign: int) -> Morphism:
    if a.src != b.src or a.dst != b.dst:
        raise ShapeMismatch("sum of morphisms with different endpoints")
    an = F.multiply(a.num, np.array(b.den))
    bn = F.multiply(b.num, np.array(a.den * sign))
    total = an.astype(object) + bn.astype(object)
    return Morphism.raw(a.src, a.dst, total, a.den * b.den)


def _apply_forward(t: np.ndarray, step, field: Field) -> np.ndarray:
    kind, left, right = step[0], step[1], step[2]
    cols = t.shape[-1]
    if kind == "mat":
        mat = step[3]
        out_d, in_d = mat.shape
        t = t.reshape(left, in_d, right * cols)
        t = F.tensordot(mat, t, axes=(1, 1)).transpose(1, 0, 2)
        t = t.reshape(left * out_d * right, cols)
    else:
        kappa = step[3]
        dx, dy = kappa.shape
        t = t.reshape(left, dx, dy, right * cols)
        t = F.multiply(t, kappa[None, :, :, None]).transpose(0, 2, 1, 3)
        t = t.reshape(left * dx * dy * right, cols)
    if isinstance(field, F.PrimeField):
        t = t % field.p
    return np.ascontiguousarray(t)


def _apply_backward(r: np.ndarray, step, field: Field) -> np.ndarray:
    kind, left, right = step[0], step[1], step[2]
    rows = r.shape[0]
    if kind == "mat":
        mat = step[3]
        out_d, in_d = mat.shape
        r = r.reshape(rows, left, out_d, right)
        r = F.tensordot(r, mat, axes=(2, 0)).transpose(0, 1, 3, 2)
        r = r.reshape(rows, left * in_d * right)
    else:
        kappa = step[3]
        dx, dy = kappa.shape
        r = r.reshape(rows, left, dy, dx, right).transpose(0, 1, 3, 2, 4)
        r = F.multiply(r, kappa[None, None, :, :, None])
        r = r.reshape(rows, left * dx * dy * right)
    if isinstance(field, F.PrimeField):
        r = r % field.p
    return np.ascontiguousarray(r)


def evaluate(expr) -> Morphism:
    """Contract a diagram to a single exact matrix."""
    if isinstance(expr, Morphism):
        return expr
    expr = _expr(expr)
    field = expr.src.field
    steps = expr._steps(1, 1)
    den = 1
    for s in steps:
        if s[0] == "mat":
            den *= s[4]
    n_src, n_dst = expr.src.dim, expr.dst.dim
    if n_dst <= n_src:
        r = np.eye(n_dst, dtype=np.int64)
        for s in reversed(steps):
            r = _apply_backward(r, s, field)
        num = r
    else:
        t = np.eye(n_src, dtype=np.int64)
        for s in steps:
            t = _apply_forward(t, s, field)
        num = t
    return Morphism.raw(expr.src, expr.dst, num, den)


# the named categorical operations


def identity(x: FinObject) -> Morphism:
    return Morphism.raw(x, x, np.eye(x.dim, dtype=np.int64))


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g o f``."""
    _same_backend(f.src, g.src)
    if f.dst != g.src:
        raise ShapeMismatch(f"cannot compose: {f.dst!r} -> {g.src!r}")
    return evaluate(Compose([f, g]))


def tensor(f: Morphism, g: Morphism) -> Morphism:
    """Kronecker product ``f (x) g`` (row-major index convention)."""
    return evaluate(Tensor([f, g]))


def braiding(m: FinObject, n: FinObject) -> Morphism:
    return evaluate(Braid(m, n))


def c(m: FinObject, n: FinObject) -> Braid:
    """The braiding as a lazy diagram node."""
    return Braid(m, n)


def is_symmetric(b: BraidSpec, field: Field | None = None) -> bool:
    """True iff ``c_{N,M} o c_{M,N} = id`` for all objects."""
    return b.symmetric()


def inverse(f: Morphism) -> Morphism:
    """Gauss-Jordan inverse over the exact field."""
    if f.src.dim != f.dst.dim:
        raise NotInvertible("non-square morphism")
    inv = F.invert_values(f.field, f.values())
    return Morphism(f.dst, f.src, inv)


def counit_like(x: FinObject, values: Sequence) -> Morphism:
    """A morphism ``X -> K`` given by its row."""
    return Morphism(x, unit_object(x.field, x.braid), [list(values)])


def vector(x: FinObject, values: Sequence) -> Morphism:
    """A morphism ``K -> X`` given by its column."""
    return Morphism(unit_object(x.field, x.braid), x, [[v] for v in values])
