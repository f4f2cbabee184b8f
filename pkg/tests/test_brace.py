import pytest
from hypothesis import given, settings, strategies as st

from hbx.brace import (HopfBraceData, check_brace_morphism, check_hopf_brace, gamma1, gamma_prime, require_hopf_brace,
                       trivial_brace)
from hbx.constructions import (braided_line, cyclic, group_algebra, linearize_skew_brace, permutation_matrix,
                               super_exterior_line, symmetric3, trivial_skew_brace)
from hbx.core import evaluate, inverse
from hbx.errors import InvalidBrace, InvalidSkewBrace
from hbx.fields import PrimeField, Q
from hbx.hopf import adjoint_action, transport
from hbx.skew import GroupTable, SkewBraceTable, enumerate_skew_braces

F7 = PrimeField(7)
ISO6 = enumerate_skew_braces(6, up_to_iso=True).braces
ALL_UP_TO_6 = [t for n in range(1, 7) for t in enumerate_skew_braces(n, up_to_iso=True).braces]


def brace_from(h1, h2, name=""):
    return HopfBraceData(h1.obj, h1.counit, h1.comult, h1.unit, h1.mult, h1.antipode,
                         h2.unit, h2.mult, h2.antipode, name)


@pytest.mark.parametrize("field", [Q, F7])
def test_every_small_skew_brace_linearizes(field):
    for t in ALL_UP_TO_6:
        assert check_hopf_brace(linearize_skew_brace(t, field)).passed


def test_trivial_skew_brace_is_the_trivial_brace():
    g = cyclic(3)
    a = linearize_skew_brace(trivial_skew_brace(g), Q)
    b = trivial_brace(group_algebra(g, Q))
    assert a.parts() == b.parts()


@pytest.mark.parametrize("t", ISO6, ids=lambda t: "".join(map(str, t.circ.flat()[:12])))
def test_gamma_matches_the_lambda_map(t):
    n = t.n
    d, o = t.diamond.op, t.circ.op
    g = gamma1(linearize_skew_brace(t, Q))
    for a in range(n):
        ainv = d[a].index(0)
        for b in range(n):
            target = d[ainv][o[a][b]]
            assert [g.entry(k, a * n + b).value for k in range(n)] == [int(k == target) for k in range(n)]


@pytest.mark.parametrize("h", [group_algebra(symmetric3(), Q), super_exterior_line(Q), braided_line(3, F7)],
                         ids=["S3", "exterior", "braided"])
def test_gamma_prime_of_trivial_brace_is_adjoint(h):
    assert gamma_prime(trivial_brace(h)) == adjoint_action(h)


def test_gamma_of_trivial_brace_is_trivial():
    h = group_algebra(symmetric3(), Q)
    hb = trivial_brace(h)
    assert gamma1(hb) == evaluate(h.counit | h.obj)


def test_opposite_multiplication_is_a_brace():
    # the opposite group gives the skew brace a o b = b <> a, which is valid
    g = symmetric3()
    opp = GroupTable.from_rows([[g.mul(b, a) for b in range(6)] for a in range(6)])
    hb = brace_from(group_algebra(g, Q), group_algebra(opp, Q))
    assert check_hopf_brace(hb).passed


def test_relabeled_cyclic_group_breaks_compatibility():
    d = GroupTable.from_rows([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 1, 0], [3, 2, 0, 1]])
    hb = brace_from(group_algebra(d, Q), group_algebra(cyclic(4), Q))
    rep = check_hopf_brace(hb)
    primary = [law for law in rep.failed_laws if law not in rep.derived]
    assert primary == ["brace compatibility"]
    assert rep.first("brace compatibility") is not None
    with pytest.raises(InvalidBrace):
        require_hopf_brace(hb)
    with pytest.raises(InvalidSkewBrace):
        linearize_skew_brace(SkewBraceTable(d, cyclic(4)))


def test_different_units_are_caught():
    h = group_algebra(cyclic(3), Q)
    sigma = permutation_matrix(h.obj, (1, 2, 0))
    moved = transport(h, sigma, inverse(sigma))
    assert moved.counit == h.counit and moved.comult == h.comult
    rep = check_hopf_brace(brace_from(h, moved))
    assert "shared unit" in rep.failed_laws


def test_derived_laws_are_flagged():
    rep = check_hopf_brace(linearize_skew_brace(ISO6[3], Q))
    assert {"Gamma against antipode", "mu2 through Gamma", "brace compatibility through Gamma'"} <= rep.derived
    assert "brace compatibility" not in rep.derived


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(ISO6), st.permutations(range(1, 6)))
def test_linearization_is_functorial(t, rest):
    perm = (0,) + tuple(rest)
    a = linearize_skew_brace(t, Q)
    b = linearize_skew_brace(t.relabel(perm), Q)
    sigma = permutation_matrix(a.obj, perm)
    s_inv = inverse(sigma)
    assert transport(a.h1, sigma, s_inv) == b.h1
    assert transport(a.h2, sigma, s_inv) == b.h2
    assert check_brace_morphism(sigma, a, b).passed


def test_non_morphism_is_rejected():
    a = linearize_skew_brace(ISO6[0], Q)
    x = permutation_matrix(a.obj, (0, 2, 1, 3, 4, 5))
    rep = check_brace_morphism(x, a, a)
    assert rep.failed_laws == ["first multiplicative", "second multiplicative"]
