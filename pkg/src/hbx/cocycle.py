"""Invertible 1-cocycles and the functors relating them to Hopf braces.

A cocycle is a coalgebra isomorphism ``pi: A -> H`` together with a module
algebra action ``phi: A (x) H -> H`` such that

    pi o mu_A = mu_H o (pi (x) phi) o (delta_A (x) pi).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .brace import HopfBraceData, check_hopf_brace, gamma1, gamma_prime, require_hopf_brace
from .core import Morphism, c, evaluate, identity, inverse, tensor_objects
from .errors import InternalInconsistency, InvalidCocycle, ShapeMismatch
from .hopf import (HopfData, algebra_morphism_laws, coalgebra_morphism_laws, hopf_laws, is_cocommutative,
                   module_algebra_laws, require_hopf, tensor_coalgebra, transport, trivial_action)
from .report import Checker, CheckReport

__all__ = [
    "CocycleData", "CocycleMorphism", "check_cocycle", "check_cocycle_morphism", "compose_cocycle_morphisms",
    "functor_E", "functor_E_morphism", "functor_H", "functor_Q", "functor_Q_morphism", "phi_prime",
    "cocycle_from_pi", "recover_phi", "require_cocycle", "transport_source", "verify_ic_hbr_equivalence", "verify_phi_prime_theorem",
]


@dataclass(frozen=True)
class CocycleData:
    A: HopfData
    H: HopfData
    phi: Morphism
    pi: Morphism
    pi_inv: Morphism
    name: str = field(default="", compare=False)

    def __post_init__(self):
        A, H = self.A.obj, self.H.obj
        for m, src, dst, what in ((self.phi, tensor_objects(A, H), H, "phi"), (self.pi, A, H, "pi"),
                                  (self.pi_inv, H, A, "pi_inv")):
            if m.src != src or m.dst != dst:
                raise ShapeMismatch(f"{what}: expected {src!r} -> {dst!r}")


@dataclass(frozen=True)
class CocycleMorphism:
    """A pair ``(f: A -> B, g: H -> D)`` between cocycles ``src`` and ``dst``."""

    f: Morphism
    g: Morphism
    src: CocycleData
    dst: CocycleData


def _cocycle_rhs(A: HopfData, H: HopfData, phi, pi):
    return H.mult @ (pi | phi) @ (A.comult | pi)


def _phi_prime_of(A: HopfData, H: HopfData, phi, pi) -> Morphism:
    Ao, Ho = A.obj, H.obj
    return evaluate(H.mult @ (H.mult | Ho) @ (pi | phi | (H.antipode @ pi))
                    @ (A.comult | c(Ao, Ho)) @ (A.comult | Ho))


def recover_phi(A: HopfData, H: HopfData, pi: Morphism, phi_p: Morphism) -> Morphism:
    """Rebuild the cocycle action from its companion action."""
    Ao, Ho = A.obj, H.obj
    return evaluate(H.mult @ (H.mult | Ho) @ ((H.antipode @ pi) | phi_p | pi)
                    @ (A.comult | c(Ao, Ho)) @ (A.comult | Ho))


def _product_via_phi_prime(A: HopfData, H: HopfData, phi_p, pi):
    Ao, Ho = A.obj, H.obj
    return H.mult @ (phi_p | pi) @ (Ao | c(Ao, Ho)) @ (A.comult | pi)


def _pi_laws(chk: Checker, A: HopfData, H: HopfData, pi: Morphism, pi_inv: Morphism | None, prefix: str) -> None:
    if pi_inv is not None:
        chk.equal(prefix + "pi right inverse", pi @ pi_inv, identity(H.obj))
        chk.equal(prefix + "pi left inverse", pi_inv @ pi, identity(A.obj))
    coalgebra_morphism_laws(chk, pi, A.coalgebra, H.coalgebra, prefix + "pi ")
    chk.equal(prefix + "pi unital", pi @ A.unit, H.unit)


def cocycle_laws(chk: Checker, cd: CocycleData, prefix: str = "") -> bool:
    before = len(chk.report.violations)
    okA = hopf_laws(chk, cd.A, prefix + "A ")
    okH = hopf_laws(chk, cd.H, prefix + "H ")
    if not (okA and okH):
        return False
    A, H, phi, pi = cd.A, cd.H, cd.phi, cd.pi
    Ao, Ho = A.obj, H.obj
    _pi_laws(chk, A, H, pi, cd.pi_inv, prefix)
    module_algebra_laws(chk, H.algebra, phi, A, prefix + "phi ")
    chk.equal(prefix + "cocycle", pi @ A.mult, _cocycle_rhs(A, H, phi, pi))
    # consequences
    chk.equal(prefix + "phi against antipode",
              phi @ (Ao | (H.antipode @ pi)),
              H.mult @ ((H.antipode @ H.mult) | Ho) @ (pi | phi | pi) @ (A.comult | Ho | Ao)
              @ (Ao | c(Ao, Ho)) @ (A.comult | pi), derived=True)
    if is_cocommutative(H):
        coalgebra_morphism_laws(chk, phi, tensor_coalgebra(A.coalgebra, H.coalgebra), H.coalgebra,
                                prefix + "phi ", derived=True)
    return len(chk.report.violations) == before


def check_cocycle(cd: CocycleData) -> CheckReport:
    chk = Checker(f"cocycle {cd.name}".strip())
    cocycle_laws(chk, cd)
    return chk.done()


def require_cocycle(cd: CocycleData) -> None:
    rep = check_cocycle(cd)
    if not rep.passed:
        raise InvalidCocycle(f"{cd.name or 'structure'} is not an invertible 1-cocycle: {rep.failed_laws}")


def check_cocycle_morphism(m: CocycleMorphism) -> CheckReport:
    s, d = m.src, m.dst
    chk = Checker("cocycle morphism")
    algebra_morphism_laws(chk, m.f, s.A.algebra, d.A.algebra, "f ")
    coalgebra_morphism_laws(chk, m.f, s.A.coalgebra, d.A.coalgebra, "f ")
    algebra_morphism_laws(chk, m.g, s.H.algebra, d.H.algebra, "g ")
    coalgebra_morphism_laws(chk, m.g, s.H.coalgebra, d.H.coalgebra, "g ")
    chk.equal("intertwines pi", m.g @ s.pi, d.pi @ m.f)
    chk.equal("intertwines phi", m.g @ s.phi, d.phi @ (m.f | m.g))
    return chk.done()


def compose_cocycle_morphisms(second: CocycleMorphism, first: CocycleMorphism) -> CocycleMorphism:
    return CocycleMorphism(evaluate(second.f @ first.f), evaluate(second.g @ first.g), first.src, second.dst)


# functors


def functor_H(h: HopfData) -> CocycleData:
    """The identity cocycle with the trivial action."""
    require_hopf(h)
    one = identity(h.obj)
    return CocycleData(h, h, trivial_action(h, h.obj), one, one, f"H({h.name})")


def functor_E(hb: HopfBraceData, check: bool = True) -> CocycleData:
    """``id: H2 -> H1`` acting through Gamma."""
    if check:
        require_hopf_brace(hb)
    one = identity(hb.obj)
    return CocycleData(hb.h2, hb.h1, gamma1(hb), one, one, f"E({hb.name})")


def functor_E_morphism(x: Morphism, src: HopfBraceData, dst: HopfBraceData) -> CocycleMorphism:
    return CocycleMorphism(x, x, functor_E(src, False), functor_E(dst, False))


def functor_Q(cd: CocycleData, check: bool = True) -> HopfBraceData:
    """The brace ``(H, H_pi)`` with the second structure transported along ``pi``."""
    if check:
        require_cocycle(cd)
    A, H, pi, pinv = cd.A, cd.H, cd.pi, cd.pi_inv
    mult2 = evaluate(pi @ A.mult @ (pinv | pinv))
    antipode2 = evaluate(pi @ A.antipode @ pinv)
    return HopfBraceData(H.obj, H.counit, H.comult, H.unit, H.mult, H.antipode,
                         H.unit, mult2, antipode2, f"Q({cd.name})")


def functor_Q_morphism(m: CocycleMorphism) -> Morphism:
    return m.g


# the companion action


def phi_prime(cd: CocycleData, check: bool = True) -> Morphism:
    """The companion action ``phi'``.

    With ``check`` the cocycle is validated first and the defining
    properties of the result are asserted.
    """
    if check:
        require_cocycle(cd)
    out = _phi_prime_of(cd.A, cd.H, cd.phi, cd.pi)
    if check:
        rep = _companion_report(cd, out)
        if not rep.passed:
            raise InternalInconsistency(f"companion action of a valid cocycle: {rep.failed_laws}")
    return out


def _companion_report(cd: CocycleData, phi_p: Morphism) -> CheckReport:
    chk = Checker("companion action")
    A, H, pi = cd.A, cd.H, cd.pi
    module_algebra_laws(chk, H.algebra, phi_p, A, "phi' ", derived=True)
    chk.equal("product via phi'", pi @ A.mult, _product_via_phi_prime(A, H, phi_p, pi), derived=True)
    chk.equal("recovery", recover_phi(A, H, pi, phi_p), cd.phi, derived=True)
    return chk.done()


def verify_phi_prime_theorem(A: HopfData, H: HopfData, pi: Morphism, phi: Morphism | None = None,
                             phi_p: Morphism | None = None, pi_inv: Morphism | None = None) -> CheckReport:
    """Both directions of the cocycle / companion-action equivalence.

    Given ``phi`` the forward direction is checked and its ``phi'`` feeds
    the backward direction; given only ``phi_p`` the backward direction
    rebuilds ``phi`` and checks the cocycle law.
    """
    if phi is None and phi_p is None:
        raise ValueError("supply phi or phi_p")
    chk = Checker("cocycle vs companion action")
    if not (hopf_laws(chk, A, "A ") and hopf_laws(chk, H, "H ")):
        return chk.done()
    _pi_laws(chk, A, H, pi, pi_inv, "")
    if phi is not None:
        computed = _phi_prime_of(A, H, phi, pi)
        module_algebra_laws(chk, H.algebra, phi, A, "(i) phi ")
        chk.equal("(i) cocycle", pi @ A.mult, _cocycle_rhs(A, H, phi, pi))
        module_algebra_laws(chk, H.algebra, computed, A, "(i)=>(ii) phi' ", derived=True)
        chk.equal("(i)=>(ii) product via phi'", pi @ A.mult, _product_via_phi_prime(A, H, computed, pi),
                  derived=True)
        chk.equal("(i)=>(ii) recovery", recover_phi(A, H, pi, computed), phi, derived=True)
        if phi_p is None:
            phi_p = computed
        else:
            chk.equal("supplied phi' matches", phi_p, computed)
    module_algebra_laws(chk, H.algebra, phi_p, A, "(ii) phi' ")
    chk.equal("(ii) product via phi'", pi @ A.mult, _product_via_phi_prime(A, H, phi_p, pi))
    rebuilt = recover_phi(A, H, pi, phi_p)
    module_algebra_laws(chk, H.algebra, rebuilt, A, "(ii)=>(i) phi ", derived=True)
    chk.equal("(ii)=>(i) cocycle", pi @ A.mult, _cocycle_rhs(A, H, rebuilt, pi), derived=True)
    chk.equal("(ii)=>(i) round trip", _phi_prime_of(A, H, rebuilt, pi), phi_p, derived=True)
    return chk.done()


def _brace_parts_equal(chk: Checker, prefix: str, x: HopfBraceData, y: HopfBraceData) -> None:
    px, py = x.parts(), y.parts()
    for k in px:
        chk.equal(f"{prefix}{k}", px[k], py[k])


def verify_ic_hbr_equivalence(braces=(), cocycles=()) -> CheckReport:
    """QE = id on braces and ``(pi, id_H): pi -> EQ(pi)`` an isomorphism on cocycles."""
    chk = Checker("cocycles vs braces")
    for hb in braces:
        tag = f"[{hb.name}] "
        if not chk.include(check_hopf_brace(hb), tag):
            continue
        _brace_parts_equal(chk, tag + "QE=id ", functor_Q(functor_E(hb, False), False), hb)
    for cd in cocycles:
        tag = f"[{cd.name}] "
        if not chk.include(check_cocycle(cd), tag):
            continue
        q = functor_Q(cd, False)
        e = functor_E(q, False)
        chk.include(check_hopf_brace(q), tag + "Q ")
        chk.include(check_cocycle(e), tag + "EQ ")
        chk.equal(tag + "phi = Gamma o (pi (x) H)", cd.phi, gamma1(q) @ (cd.pi | cd.H.obj))
        chk.equal(tag + "phi' = Gamma' o (pi (x) H)", _phi_prime_of(cd.A, cd.H, cd.phi, cd.pi),
                  gamma_prime(q) @ (cd.pi | cd.H.obj))
        one = identity(cd.H.obj)
        fwd = CocycleMorphism(cd.pi, one, cd, e)
        back = CocycleMorphism(cd.pi_inv, one, e, cd)
        chk.include(check_cocycle_morphism(fwd), tag + "(pi, id) ")
        chk.include(check_cocycle_morphism(back), tag + "(pi^-1, id) ")
        there_and_back = compose_cocycle_morphisms(back, fwd)
        back_and_there = compose_cocycle_morphisms(fwd, back)
        chk.equal(tag + "inverse on A", there_and_back.f, identity(cd.A.obj))
        chk.equal(tag + "inverse on H_pi", back_and_there.f, identity(e.A.obj))
    return chk.done()


def cocycle_from_pi(A: HopfData, H: HopfData, pi: Morphism, phi: Morphism, name: str = "") -> CocycleData:
    """Convenience constructor that inverts ``pi`` exactly."""
    return CocycleData(A, H, phi, pi, inverse(pi), name)


def transport_source(cd: CocycleData, sigma: Morphism, name: str = "") -> CocycleData:
    """Replace ``A`` by its transport along ``sigma: A -> A'``; ``pi`` becomes ``pi o sigma^-1``."""
    sigma_inv = inverse(sigma)
    A2 = transport(cd.A, sigma, sigma_inv, f"{cd.A.name}^sigma")
    return CocycleData(A2, cd.H, evaluate(cd.phi @ (sigma_inv | cd.H.obj)), evaluate(cd.pi @ sigma_inv),
                       evaluate(sigma @ cd.pi_inv), name or f"{cd.name}^sigma")
