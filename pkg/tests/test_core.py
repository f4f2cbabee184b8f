from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import dense_oracle as D
from hbx.core import BraidSpec, Morphism, braiding, c, evaluate, identity, inverse, make_object, tensor, unit_object
from hbx.errors import BraidMismatch, DegreeError, FieldMismatch, NotInvertible, ShapeMismatch
from hbx.fields import PrimeField, Q

F7 = PrimeField(7)
B3 = BraidSpec.bicharacter(3, F7(2))


def rand_morphism(draw, src, dst, field):
    vals = [[draw(st.integers(-3, 3)) if dst.grading[i] == src.grading[j] else 0 for j in range(src.dim)]
            for i in range(dst.dim)]
    return Morphism(src, dst, vals)


@st.composite
def graded(draw, field=F7, braid=B3, max_dim=3):
    n = draw(st.integers(2, max_dim))
    g = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    return make_object(n, field, braid, g)


@st.composite
def graded_map(draw):
    x, y = draw(graded()), draw(graded())
    return rand_morphism(draw, x, y, F7)


def as_lists(m):
    return [[Fraction(v) for v in row] for row in m.values()]


@settings(max_examples=40)
@given(graded_map(), graded_map())
def test_tensor_matches_kronecker(f, g):
    got = tensor(f, g).values()
    assert got == D.kron(f.values(), g.values(), 7)


@settings(max_examples=40)
@given(graded(), graded())
def test_braiding_matches_oracle(x, y):
    assert braiding(x, y).values() == D.braid(x.grading, y.grading, 2, 7)


@settings(max_examples=30)
@given(graded_map(), graded_map())
def test_braiding_is_natural(f, g):
    lhs = evaluate(c(f.dst, g.dst) @ (f | g))
    rhs = evaluate((g | f) @ c(f.src, g.src))
    assert lhs == rhs


@settings(max_examples=30)
@given(graded(max_dim=2), graded(max_dim=2), graded(max_dim=2))
def test_hexagons(x, y, z):
    yz, xy = y | z, x | y
    assert evaluate(c(x, yz.src)) == evaluate((y | c(x, z)) @ (c(x, y) | z))
    assert evaluate(c(xy.src, z)) == evaluate((c(x, z) | y) @ (x | c(y, z)))


@settings(max_examples=30)
@given(graded_map(), graded_map(), graded_map(), graded_map())
def test_interchange(f, g, h, k):
    if h.src != f.dst or k.src != g.dst:
        return
    assert evaluate((h | k) @ (f | g)) == evaluate((h @ f) | (k @ g))


def test_interchange_with_compatible_maps():
    x = make_object(2, Q)
    f = Morphism(x, x, [[1, 2], [3, 4]])
    g = Morphism(x, x, [[0, 1], [1, 1]])
    assert evaluate((g | f) @ (f | g)) == tensor(evaluate(g @ f), evaluate(f @ g))


def test_unit_object_is_strict():
    x = make_object(3, Q)
    K = unit_object(Q)
    assert (K | x).src == x
    assert evaluate(c(K, x)) == identity(x)


def test_symmetry_by_backend():
    assert BraidSpec.swap().symmetric()
    assert BraidSpec.sign(Q).symmetric()
    assert not B3.symmetric()
    x = make_object(2, F7, B3, [0, 1])
    xx = (x | x).src
    assert evaluate(c(x, x) @ c(x, x)) != identity(xx)


def test_sign_braiding_on_odd_vectors():
    x = make_object(2, Q, BraidSpec.sign(Q), [0, 1])
    m = braiding(x, x)
    assert m.entry(3, 3).value == -1
    assert evaluate(m @ m) == identity(m.src)


def test_composition_matches_oracle():
    x, y = make_object(2, Q), make_object(3, Q)
    f = Morphism(x, y, [[1, 2], ["1/2", 0], [0, -1]])
    g = Morphism(y, x, [[1, 0, 1], [2, 3, "1/3"]])
    assert evaluate(g @ f).values() == D.matmul(g.values(), f.values())


def test_exact_inverse():
    x = make_object(3, Q)
    f = Morphism(x, x, [[2, 1, 0], [0, 1, 0], [1, 0, "1/2"]])
    assert evaluate(inverse(f) @ f) == identity(x)
    with pytest.raises(NotInvertible):
        inverse(Morphism(x, x, np.zeros((3, 3), dtype=int)))


def test_degree_is_enforced():
    x = make_object(2, F7, B3, [0, 1])
    with pytest.raises(DegreeError):
        Morphism(x, x, [[0, 1], [0, 0]])


def test_mismatches():
    x, y = make_object(2, Q), make_object(3, Q)
    with pytest.raises(ShapeMismatch):
        evaluate(identity(x) @ identity(y))
    with pytest.raises(FieldMismatch):
        make_object(2, F7) | x
    with pytest.raises(BraidMismatch):
        make_object(2, Q, BraidSpec.sign(Q)) | x
