import pytest

from hbx.cocycle import CocycleMorphism, functor_H
from hbx.constructions import permutation_matrix
from hbx.core import evaluate, identity
from hbx.errors import InvalidModule, NotCocommutative, NotSymmetric
from hbx.hopf import ModuleData, check_left_module, regular_module, trivial_module
from hbx.modules import (BraceModuleData, brace_modules_equal, check_brace_module, check_brace_module_morphism,
                         check_cocycle_module, check_cocycle_module_morphism, check_zhu_condition, functor_G,
                         functor_Hbr_pi, functor_I_H, functor_J, functor_L, functor_M_fg, gamma_M,
                         regular_brace_module, regular_cocycle_module, swap_cocycle_modules, tensor_brace_modules,
                         tensor_cocycle_modules, trivial_brace_module, trivial_cocycle_module,
                         verify_module_equivalence)

SIGMA = "E(lin skew 6.5/Q)^sigma"


def test_regular_and_trivial_brace_modules(cat):
    for name in ("lin skew 6.5/Q", "trivial exterior line/Q", "trivial braided line 3/F7"):
        hb = cat.braces[name]
        assert check_brace_module(regular_brace_module(hb), check_over=True).passed
        assert check_brace_module(trivial_brace_module(hb)).passed


def test_gamma_M_of_regular_module_is_gamma(cat):
    from hbx.brace import gamma1
    hb = cat.braces["lin skew 6.5/Q"]
    assert gamma_M(regular_brace_module(hb)) == gamma1(hb)


def test_regular_and_trivial_cocycle_modules(cat):
    for name in (SIGMA, "H(braided line 3/F7)", "H(k^[S3]/Q)"):
        cd = cat.cocycles[name]
        assert check_cocycle_module(regular_cocycle_module(cd), check_over=True).passed
        assert check_cocycle_module(trivial_cocycle_module(cd)).passed


def test_G_then_Hbr_is_the_identity(cat):
    hb = cat.braces["lin skew 6.5/Q"]
    for b in (regular_brace_module(hb), trivial_brace_module(hb)):
        assert brace_modules_equal(functor_Hbr_pi(functor_G(b)), b)


def test_module_equivalence_over_nontrivial_pi(cat):
    cd = cat.cocycles[SIGMA]
    mods = [regular_cocycle_module(cd), trivial_cocycle_module(cd)]
    rep = verify_module_equivalence(cd, mods)
    assert rep.passed
    assert any("(id, gamma)" in law for law in rep.laws)
    assert any("round trip psi2" in law for law in rep.laws)


def test_module_over_wrong_cocycle(cat):
    cd, other = cat.cocycles[SIGMA], cat.cocycles["H(k[C3]/Q)"]
    with pytest.raises(InvalidModule):
        verify_module_equivalence(cd, [regular_cocycle_module(other)])


def test_identity_gamma_pair_is_an_isomorphism(cat):
    cd = cat.cocycles[SIGMA]
    x = regular_cocycle_module(cd)
    rep = check_cocycle_module_morphism(identity(x.M), x, x, identity(x.N))
    assert rep.passed
    wrong = check_cocycle_module_morphism(permutation_matrix(x.M, (0, 2, 1, 3, 4, 5)), x, x)
    assert not wrong.passed


def test_restriction_square(cat):
    # restricting along a Hopf map, then I_H, equals I_H then M_(f, f)
    h = cat.hopf["k[C3]/Q"]
    f = permutation_matrix(h.obj, (0, 2, 1))
    m = regular_module(h)
    pulled = ModuleData(m.carrier, evaluate(m.act @ (f | m.carrier)), h.algebra)
    assert check_left_module(pulled).passed
    left = functor_I_H(h, pulled)
    cd = functor_H(h)
    right = functor_M_fg(CocycleMorphism(f, f, cd, cd), functor_I_H(h, m))
    assert (left.phiM, left.varphiM, left.phiN) == (right.phiM, right.varphiM, right.phiN)
    assert check_cocycle_module(right).passed


def test_I_H_on_a_left_module(cat):
    h = cat.hopf["exterior line/Q"]
    x = functor_I_H(h, regular_module(h))
    assert check_cocycle_module(x).passed
    assert x.varphiM == evaluate(h.counit | h.obj)


def test_J_and_L(cat):
    h = cat.hopf["k[S3]/F7"]
    for m in (regular_module(h), trivial_module(h)):
        b = functor_J(h, m)
        assert check_brace_module(b).passed
        back = functor_L(b)
        assert back.carrier == m.carrier and back.act == m.act


def test_invalid_module_rejected(cat):
    h = cat.hopf["k[C3]/Q"]
    m = regular_module(h)
    broken = ModuleData(m.carrier, m.act.with_entry(0, 0, 0), h.algebra)
    with pytest.raises(InvalidModule):
        functor_I_H(h, broken)
    with pytest.raises(InvalidModule):
        functor_J(h, broken)


def test_broken_brace_module_fails_compatibility(cat):
    m = cat.get("trivial[lin skew 4.1/Q]")
    bad = BraceModuleData(m.carrier, m.psi1.with_entry(0, 1, 2), m.psi2, m.over)
    rep = check_brace_module(bad)
    assert "module compatibility" in rep.failed_laws
    with pytest.raises(InvalidModule):
        functor_G(bad)


def test_brace_module_morphisms(cat):
    hb = cat.braces["lin skew 6.5/Q"]
    r = regular_brace_module(hb)
    assert check_brace_module_morphism(identity(r.carrier), r, r).passed
    assert check_brace_module_morphism(hb.counit, r, trivial_brace_module(hb)).passed


def test_tensor_products_in_symmetric_backend(cat):
    cd = cat.cocycles["E(lin skew 4.1/Q)^sigma"]
    mods = [regular_cocycle_module(cd), trivial_cocycle_module(cd)]
    for x in mods:
        for y in mods:
            assert check_cocycle_module(tensor_cocycle_modules(x, y)).passed
            assert swap_cocycle_modules(x, y).passed


def test_tensor_products_in_sign_backend(cat):
    cd = cat.cocycles["H(exterior line/Q)"]
    x = regular_cocycle_module(cd)
    assert check_cocycle_module(tensor_cocycle_modules(x, x)).passed
    assert swap_cocycle_modules(x, x).passed


def test_brace_module_tensor_products(cat):
    hb = cat.braces["lin skew 6.5/Q"]
    r = regular_brace_module(hb)
    assert check_brace_module(tensor_brace_modules(r, r)).passed


def test_gates_fire(cat):
    cd = cat.cocycles["H(braided line 3/F7)"]
    x = regular_cocycle_module(cd)
    with pytest.raises(NotSymmetric):
        tensor_cocycle_modules(x, x)
    with pytest.raises(NotSymmetric):
        swap_cocycle_modules(x, x)
    hb = cat.braces["trivial braided line 3/F7"]
    with pytest.raises(NotSymmetric):
        tensor_brace_modules(regular_brace_module(hb), regular_brace_module(hb))
    y = regular_cocycle_module(cat.cocycles["H(k^[S3]/Q)"])
    with pytest.raises(NotCocommutative):
        tensor_cocycle_modules(y, y)
    with pytest.raises(NotCocommutative):
        tensor_brace_modules(*[regular_brace_module(cat.braces["trivial k^[S3]/Q"])] * 2)


def test_zhu_condition_on_catalog_examples(cat):
    for name in ("regular[lin skew 6.5/Q]", "trivial[lin skew 6.5/Q]", "regular[trivial braided line 3/F7]"):
        assert check_zhu_condition(cat.get(name))
