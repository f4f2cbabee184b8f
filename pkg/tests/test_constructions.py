import pytest

from hbx.brace import check_hopf_brace, trivial_brace
from hbx.constructions import (braided_line, cyclic, dual_group_algebra, group_algebra, primitive_root,
                               super_exterior_line, symmetric3)
from hbx.core import BraidSpec, evaluate, c
from hbx.errors import CharTwo, InvalidGroup, NoPrimitiveRoot
from hbx.fields import PrimeField, Q
from hbx.hopf import check_bialgebra, check_hopf, is_cocommutative, is_commutative
from hbx.skew import GroupTable

F5, F7 = PrimeField(5), PrimeField(7)


def test_trivial_group_gives_the_unit_object():
    h = group_algebra(cyclic(1), Q)
    assert h.obj.is_unit
    assert check_hopf(h).passed


def test_invalid_group_rejected():
    with pytest.raises(InvalidGroup):
        group_algebra(GroupTable.from_rows([[0, 1], [1, 1]]))


@pytest.mark.parametrize("field", [Q, F5, F7])
def test_exterior_line_in_sign_backend(field):
    h = super_exterior_line(field)
    assert h.obj.grading == (0, 1)
    assert check_hopf(h).passed
    assert check_hopf_brace(trivial_brace(h)).passed
    assert h.antipode.entry(1, 1) == field(-1)


def test_exterior_line_fails_in_swap_backend():
    rep = check_bialgebra(super_exterior_line(Q, braid="swap"))
    assert rep.failed_laws == ["comult multiplicative"]
    v = rep.first("comult multiplicative")
    # delta(x . x) = 0 while delta(x) delta(x) has 2 x (x) x
    assert v.witness == ((1, 1), (1, 1))
    assert (v.lhs.value, v.rhs.value) == (0, 2)


def test_exterior_line_needs_odd_characteristic():
    with pytest.raises(CharTwo):
        super_exterior_line(PrimeField(2))


def test_braided_line_n3():
    h = braided_line(3, F7)
    assert h.obj.braid == BraidSpec.bicharacter(3, F7(2))
    assert check_hopf(h).passed
    q = 2
    # delta(x^2) = x^2 (x) 1 + (1 + q) x (x) x + 1 (x) x^2
    col = [h.comult.entry(r, 2).value for r in range(9)]
    assert col == [0, 0, 1, 0, 1 + q, 0, 1, 0, 0]
    # S(x^n) = (-1)^n q^(n(n-1)/2) x^n
    assert [h.antipode.entry(n, n).value for n in range(3)] == [1, (-1) % 7, q]
    assert not is_cocommutative(h)
    flipped = evaluate(c(h.obj, h.obj) @ h.comult)
    assert flipped.entry(4, 2).value == (1 + q) * q % 7


def test_braided_line_other_root():
    h = braided_line(3, F7, q=4)
    assert check_hopf(h).passed


def test_braided_line_n2_is_the_exterior_line():
    a, b = braided_line(2, F7), super_exterior_line(F7)
    for k in ("unit", "mult", "counit", "comult", "antipode"):
        assert getattr(a, k) == getattr(b, k)


def test_no_primitive_root():
    with pytest.raises(NoPrimitiveRoot):
        primitive_root(3, F5)
    with pytest.raises(NoPrimitiveRoot):
        braided_line(3, F5)


def test_dual_group_algebra():
    h = dual_group_algebra(symmetric3(), Q)
    assert check_hopf(h).passed
    assert is_commutative(h)
    assert not is_cocommutative(h)


def test_group_algebra_commutativity_tracks_the_group():
    assert is_commutative(group_algebra(cyclic(4), F5))
    assert not is_commutative(group_algebra(symmetric3(), F5))


def test_catalog_shape(cat):
    assert cat.size() >= 20
    assert {"k[S3]/F5", "exterior line/Q", "braided line 3/F7"} <= set(cat.hopf)
    assert any(not is_cocommutative(h) for h in cat.hopf.values())
    assert [k for k in cat.braces if k.startswith("lin skew 6.")] == [f"lin skew 6.{k}/Q" for k in range(6)]
