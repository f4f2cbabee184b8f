"""Concrete Hopf algebras and Hopf braces.

Group algebras and their duals, linearized skew braces, the exterior line on one odd
generator and the braided line ``k[x]/(x^N)`` with a primitive root of
unity in the braiding.
"""

from __future__ import annotations

import numpy as np

from . import fields as F
from .brace import HopfBraceData
from .core import BraidSpec, FinObject, Morphism, evaluate, make_object, unit_object, vector
from .errors import CharTwo, InvalidHopf, InvalidInput, InvalidSkewBrace, NoPrimitiveRoot
from .fields import Field, PrimeField
from .hopf import AlgebraData, HopfData, tensor_algebra
from .skew import (GroupTable, SkewBraceTable, check_skew_brace, cyclic, direct_product,  # noqa: F401
                   enumerate_skew_braces, require_group, symmetric3)


def _table_mult(obj: FinObject, g: GroupTable) -> Morphism:
    n = g.n
    m = np.zeros((n, n * n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            m[g.mul(a, b), a * n + b] = 1
    return Morphism.raw(obj ** 2, obj, m)


def _inverse_map(obj: FinObject, g: GroupTable) -> Morphism:
    n = g.n
    m = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        m[g.inv(a), a] = 1
    return Morphism.raw(obj, obj, m)


def _grouplike_coalgebra(obj: FinObject) -> tuple[Morphism, Morphism]:
    n = obj.dim
    d = np.zeros((n * n, n), dtype=np.int64)
    for a in range(n):
        d[a * n + a, a] = 1
    K = unit_object(obj.field, obj.braid)
    return Morphism.raw(obj, K, np.ones((1, n), dtype=np.int64)), Morphism.raw(obj, obj ** 2, d)


def _basis_vector(obj: FinObject, i: int) -> Morphism:
    return vector(obj, [1 if k == i else 0 for k in range(obj.dim)])


def group_algebra(g: GroupTable, field: Field = F.Q, braid: BraidSpec | None = None, name: str = "") -> HopfData:
    """The group algebra with group-like basis, concentrated in degree 0."""
    require_group(g)
    obj = make_object(g.n, field, braid, name=name or f"k{g.n}")
    counit, comult = _grouplike_coalgebra(obj)
    return HopfData(obj, _basis_vector(obj, g.e), _table_mult(obj, g), counit, comult,
                    _inverse_map(obj, g), name or f"k[G{g.n}]")


def dual_group_algebra(g: GroupTable, field: Field = F.Q, braid: BraidSpec | None = None,
                       name: str = "") -> HopfData:
    """Functions on a finite group: idempotent basis, convolution-dual coproduct.

    Not cocommutative when the group is not abelian, even under the plain swap.
    """
    require_group(g)
    n = g.n
    obj = make_object(n, field, braid, name=name or f"k^{n}")
    K = unit_object(obj.field, obj.braid)
    mult = np.zeros((n, n * n), dtype=np.int64)
    comult = np.zeros((n * n, n), dtype=np.int64)
    for a in range(n):
        mult[a, a * n + a] = 1
        for b in range(n):
            comult[a * n + b, g.mul(a, b)] = 1
    counit = np.zeros((1, n), dtype=np.int64)
    counit[0, g.e] = 1
    return HopfData(obj, Morphism.raw(K, obj, np.ones((n, 1), dtype=np.int64)), Morphism.raw(obj ** 2, obj, mult),
                    Morphism.raw(obj, K, counit), Morphism.raw(obj, obj ** 2, comult), _inverse_map(obj, g),
                    name or f"k^[G{n}]")


def linearize_skew_brace(t: SkewBraceTable, field: Field = F.Q, name: str = "") -> HopfBraceData:
    """Hopf brace on the group-like coalgebra spanned by the underlying set."""
    rep = check_skew_brace(t)
    if not rep.passed:
        raise InvalidSkewBrace(f"not a skew brace: {rep.failed_laws}")
    obj = make_object(t.n, field, name=name or "H")
    counit, comult = _grouplike_coalgebra(obj)
    unit = _basis_vector(obj, t.diamond.e)
    return HopfBraceData(obj, counit, comult,
                         unit, _table_mult(obj, t.diamond), _inverse_map(obj, t.diamond),
                         unit, _table_mult(obj, t.circ), _inverse_map(obj, t.circ),
                         name or f"brace{t.n}")


def permutation_matrix(obj: FinObject, perm) -> Morphism:
    """The morphism ``e_a -> e_perm[a]``."""
    n = obj.dim
    m = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        m[perm[a], a] = 1
    return Morphism.raw(obj, obj, m)


def solve_antipode(obj: FinObject, unit: Morphism, mult: Morphism, counit: Morphism,
                   comult: Morphism) -> Morphism:
    """The unique degree-preserving ``S`` with ``S * id = id * S = eta o eps``.

    Solved as a linear system in the entries of ``S``; raises InvalidHopf
    when the bialgebra has no antipode.
    """
    field, n = obj.field, obj.dim
    mu = np.array(mult.values(), dtype=object).reshape(n, n, n)  # [m, a, k]
    de = np.array(comult.values(), dtype=object).reshape(n, n, n)  # [j, k, i]
    target = np.array(evaluate(unit @ counit).values(), dtype=object)  # [m, i]
    # S*id: sum_{j,k} de[j,k,i] S[a,j] mu[m,a,k];  id*S: sum_{j,k} de[j,k,i] mu[m,j,a] S[a,k]
    left = np.tensordot(mu, de, axes=([2], [1]))  # [m, a, j, i]
    right = np.tensordot(mu, de, axes=([1], [0]))  # [m, a, k, i]
    unknowns = [(a, j) for a in range(n) for j in range(n) if obj.grading[a] == obj.grading[j]]
    rows, rhs = [], []
    for coef in (left, right):
        for m in range(n):
            for i in range(n):
                rows.append([field.coerce(coef[m, a, j, i]) for a, j in unknowns])
                rhs.append(field.coerce(target[m, i]))
    sol = F.solve_values(field, rows, rhs)
    if sol is None:
        raise InvalidHopf("the bialgebra has no antipode")
    s = np.zeros((n, n), dtype=object)
    for (a, j), v in zip(unknowns, sol):
        s[a, j] = v
    return Morphism(obj, obj, s)


def super_exterior_line(field: Field = F.Q, braid: str = "sign") -> HopfData:
    """``k[x]/(x^2)`` with ``x`` primitive.

    With ``braid="sign"`` the generator is odd and the axioms hold; with
    ``braid="swap"`` everything sits in degree 0 and the comultiplication is
    no longer multiplicative.
    """
    if field.char == 2:
        raise CharTwo("the exterior line needs characteristic different from 2")
    if braid == "sign":
        obj = make_object(2, field, BraidSpec.sign(field), (0, 1), name="L")
    elif braid == "swap":
        obj = make_object(2, field, BraidSpec.swap(), name="L")
    else:
        raise InvalidInput(f"unknown braiding {braid!r}")
    K = unit_object(field, obj.braid)
    # basis 1, x; products e_i e_j listed as columns i*2+j
    mult = Morphism(obj ** 2, obj, [[1, 0, 0, 0], [0, 1, 1, 0]])
    comult = Morphism(obj, obj ** 2, [[1, 0], [0, 1], [0, 1], [0, 0]])
    return HopfData(obj, vector(obj, [1, 0]), mult, Morphism(obj, K, [[1, 0]]), comult,
                    Morphism(obj, obj, [[1, 0], [0, -1]]), f"exterior line ({braid})")


def primitive_root(n: int, field: PrimeField) -> F.Scalar:
    """The smallest primitive ``n``-th root of unity in ``F_p``."""
    if not isinstance(field, PrimeField):
        raise NoPrimitiveRoot("primitive roots are only searched in prime fields")
    for r in range(1, field.p):
        q = field(r)
        if q ** n == 1 and all(q ** k != 1 for k in range(1, n)):
            return q
    raise NoPrimitiveRoot(f"F{field.p} has no primitive {n}-th root of unity")


def braided_line(n: int, field: PrimeField, q=None) -> HopfData:
    """``k[x]/(x^n)`` with ``x`` primitive of degree 1, braided by ``q``."""
    if n < 2:
        raise InvalidInput("the braided line needs n >= 2")
    if q is None:
        q = primitive_root(n, field)
    else:
        q = field(q)
        if q ** n != 1 or any(q ** k == 1 for k in range(1, n)):
            raise NoPrimitiveRoot(f"{q} is not a primitive {n}-th root of unity in {field!r}")
    obj = make_object(n, field, BraidSpec.bicharacter(n, q), range(n), name="x")
    K = unit_object(field, obj.braid)
    mult = np.zeros((n, n * n), dtype=np.int64)
    for i in range(n):
        for j in range(n - i):
            mult[i + j, i * n + j] = 1
    mult = Morphism(obj ** 2, obj, mult)
    unit = _basis_vector(obj, 0)
    counit = Morphism(obj, K, [[1] + [0] * (n - 1)])
    # the comultiplication is the algebra map generated by x -> x (x) 1 + 1 (x) x
    hh = tensor_algebra(AlgebraData(obj, unit, mult), AlgebraData(obj, unit, mult))
    dx = np.zeros(n * n, dtype=np.int64)
    dx[1 * n + 0] = dx[0 * n + 1] = 1
    # columns are homogeneous of positive degree, so they are not morphisms out of K
    dx = Morphism(K, obj ** 2, dx.reshape(-1, 1), check=False)
    cols = [evaluate(unit | unit)]
    for _ in range(1, n):
        cols.append(evaluate(hh.mult @ (cols[-1] | dx)))
    comult = Morphism(obj, obj ** 2, np.hstack([np.array(v.values(), dtype=object) for v in cols]))
    antipode = solve_antipode(obj, unit, mult, counit, comult)
    return HopfData(obj, unit, mult, counit, comult, antipode, f"braided line N={n} q={q}")


def trivial_skew_brace(g: GroupTable) -> SkewBraceTable:
    return SkewBraceTable(g, g)


def linearized_braces(max_order: int = 6, field: Field = F.Q) -> list[HopfBraceData]:
    """One linearized Hopf brace per isomorphism class of skew braces."""
    out = []
    for n in range(1, max_order + 1):
        for k, t in enumerate(enumerate_skew_braces(n, up_to_iso=True).braces):
            hb = linearize_skew_brace(t, field, name=f"skew brace {n}.{k}")
            out.append(hb)
    return out


__all__ = [
    "GroupTable", "SkewBraceTable", "braided_line", "check_skew_brace", "cyclic", "direct_product",
    "dual_group_algebra",
    "enumerate_skew_braces", "group_algebra", "linearize_skew_brace", "linearized_braces",
    "permutation_matrix", "primitive_root", "solve_antipode", "super_exterior_line", "symmetric3",
    "trivial_skew_brace",
]
