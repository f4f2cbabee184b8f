"""Modules over Hopf braces and over invertible 1-cocycles, and the functors between them."""

from __future__ import annotations

from dataclasses import dataclass, field

from .brace import HopfBraceData, check_hopf_brace, gamma1, gamma_prime, is_cocommutative, trivial_brace
from .cocycle import CocycleData, CocycleMorphism, check_cocycle, functor_E, functor_H, functor_Q
from .core import FinObject, Morphism, c, evaluate, identity, tensor_objects
from .errors import InternalInconsistency, InvalidModule, NotCocommutative, NotSymmetric, ShapeMismatch
from .hopf import HopfData, ModuleData, check_left_module, diagonal_action, module_laws, unit_of
from .report import Checker, CheckReport

__all__ = [
    "BraceModuleData", "CocycleModuleData", "brace_modules_equal", "check_brace_module",
    "check_brace_module_morphism", "check_cocycle_module", "check_cocycle_module_morphism",
    "check_zhu_condition", "functor_G", "functor_Hbr_pi", "functor_I_H", "functor_J", "functor_L",
    "functor_M_fg", "gamma_M", "regular_brace_module", "regular_cocycle_module", "swap_cocycle_modules",
    "tensor_brace_modules",
    "tensor_cocycle_modules", "trivial_brace_module", "trivial_cocycle_module", "verify_module_equivalence",
]


def _expect(m: Morphism, src: FinObject, dst: FinObject, what: str) -> None:
    if m.src != src or m.dst != dst:
        raise ShapeMismatch(f"{what}: expected {src!r} -> {dst!r}, got {m.src!r} -> {m.dst!r}")


@dataclass(frozen=True)
class BraceModuleData:
    """``(M, psi1, psi2)``: an ``H1``-module and an ``H2``-module on one carrier."""

    carrier: FinObject
    psi1: Morphism
    psi2: Morphism
    over: HopfBraceData
    name: str = field(default="", compare=False)

    def __post_init__(self):
        src = tensor_objects(self.over.obj, self.carrier)
        _expect(self.psi1, src, self.carrier, "psi1")
        _expect(self.psi2, src, self.carrier, "psi2")


@dataclass(frozen=True)
class CocycleModuleData:
    """``(M, N, phi_M, varphi_M, phi_N, gamma)`` over a cocycle ``pi: A -> H``."""

    M: FinObject
    N: FinObject
    phiM: Morphism
    varphiM: Morphism
    phiN: Morphism
    gamma: Morphism
    gamma_inv: Morphism
    over: CocycleData
    name: str = field(default="", compare=False)

    def __post_init__(self):
        A, H = self.over.A.obj, self.over.H.obj
        _expect(self.phiM, tensor_objects(A, self.M), self.M, "phi_M")
        _expect(self.varphiM, tensor_objects(H, self.M), self.M, "varphi_M")
        _expect(self.phiN, tensor_objects(A, self.N), self.N, "phi_N")
        _expect(self.gamma, self.N, self.M, "gamma")
        _expect(self.gamma_inv, self.M, self.N, "gamma_inv")


# brace modules


def gamma_M(m: BraceModuleData) -> Morphism:
    """``psi1 o (lam1 (x) psi2) o (delta (x) M)``."""
    hb = m.over
    return evaluate(m.psi1 @ (hb.antipode1 | m.psi2) @ (hb.comult | m.carrier))


def brace_module_laws(chk: Checker, m: BraceModuleData, prefix: str = "") -> bool:
    before = len(chk.report.violations)
    hb, M = m.over, m.carrier
    H, delta = hb.obj, hb.comult
    module_laws(chk, hb.h1.algebra, M, m.psi1, prefix + "psi1 ")
    module_laws(chk, hb.h2.algebra, M, m.psi2, prefix + "psi2 ")
    g = gamma_M(m)
    chk.equal(prefix + "module compatibility",
              m.psi2 @ (H | m.psi1),
              m.psi1 @ (hb.mult2 | g) @ (H | c(H, H) | M) @ (delta | H | M))
    # consequences
    chk.equal(prefix + "module compatibility through Gamma'",
              m.psi2 @ (H | m.psi1),
              m.psi1 @ (gamma_prime(hb) | m.psi2) @ (H | c(H, H) | M) @ (delta | H | M), derived=True)
    chk.equal(prefix + "Gamma_M against psi1",
              g @ (H | m.psi1),
              m.psi1 @ (gamma1(hb) | g) @ (H | c(H, H) | M) @ (delta | H | M), derived=True)
    module_laws(chk, hb.h2.algebra, M, g, prefix + "Gamma_M ", derived=True)
    return len(chk.report.violations) == before


def check_brace_module(m: BraceModuleData, check_over: bool = False) -> CheckReport:
    chk = Checker(f"brace module {m.name}".strip())
    if check_over and not chk.include(check_hopf_brace(m.over), "brace "):
        return chk.done()
    brace_module_laws(chk, m)
    return chk.done()


def _require_brace_module(m: BraceModuleData) -> None:
    rep = check_brace_module(m)
    if not rep.passed:
        raise InvalidModule(f"{m.name or 'structure'} is not a brace module: {rep.failed_laws}")


def check_zhu_condition(m: BraceModuleData) -> bool:
    """Whether ``(psi2 (x) H) o (H (x) c) o (delta (x) M)`` equals the Gamma_M-twisted form."""
    hb, M = m.over, m.carrier
    H, delta = hb.obj, hb.comult
    lhs = evaluate((m.psi2 | H) @ (H | c(H, M)) @ (delta | M))
    rhs = evaluate((m.psi1 | H) @ (H | c(H, M)) @ (delta | gamma_M(m)) @ (delta | M))
    return lhs == rhs


def check_brace_module_morphism(f: Morphism, src: BraceModuleData, dst: BraceModuleData) -> CheckReport:
    H = src.over.obj
    chk = Checker("brace module morphism")
    chk.equal("psi1 linear", f @ src.psi1, dst.psi1 @ (H | f))
    chk.equal("psi2 linear", f @ src.psi2, dst.psi2 @ (H | f))
    return chk.done()


def brace_modules_equal(x: BraceModuleData, y: BraceModuleData) -> bool:
    return x.carrier == y.carrier and x.psi1 == y.psi1 and x.psi2 == y.psi2


def regular_brace_module(hb: HopfBraceData) -> BraceModuleData:
    return BraceModuleData(hb.obj, hb.mult1, hb.mult2, hb, f"regular[{hb.name}]")


def trivial_brace_module(hb: HopfBraceData) -> BraceModuleData:
    K = unit_of(hb.obj)
    return BraceModuleData(K, hb.counit, hb.counit, hb, f"trivial[{hb.name}]")


# cocycle modules


def cocycle_module_laws(chk: Checker, x: CocycleModuleData, prefix: str = "") -> bool:
    before = len(chk.report.violations)
    cd = x.over
    A, H = cd.A, cd.H
    Ao, Ho, M = A.obj, H.obj, x.M
    chk.equal(prefix + "gamma right inverse", x.gamma @ x.gamma_inv, identity(M))
    chk.equal(prefix + "gamma left inverse", x.gamma_inv @ x.gamma, identity(x.N))
    module_laws(chk, A.algebra, M, x.phiM, prefix + "phi_M ")
    module_laws(chk, H.algebra, M, x.varphiM, prefix + "varphi_M ")
    module_laws(chk, A.algebra, x.N, x.phiN, prefix + "phi_N ")
    chk.equal(prefix + "actions compatible",
              x.phiM @ (Ao | x.varphiM),
              x.varphiM @ (cd.phi | x.phiM) @ (Ao | c(Ao, Ho) | M) @ (A.comult | Ho | M))
    chk.equal(prefix + "gamma equivariance",
              x.gamma @ x.phiN,
              x.varphiM @ (cd.pi | x.phiM) @ (A.comult | x.gamma))
    # consequences
    chk.equal(prefix + "phi_N determined",
              x.phiN,
              x.gamma_inv @ x.varphiM @ (cd.pi | x.phiM) @ (A.comult | x.gamma), derived=True)
    chk.equal(prefix + "phi_M determined",
              x.phiM,
              x.varphiM @ ((H.antipode @ cd.pi) | (x.gamma @ x.phiN)) @ (A.comult | x.gamma_inv), derived=True)
    return len(chk.report.violations) == before


def check_cocycle_module(x: CocycleModuleData, check_over: bool = False) -> CheckReport:
    chk = Checker(f"cocycle module {x.name}".strip())
    if check_over and not chk.include(check_cocycle(x.over), "cocycle "):
        return chk.done()
    cocycle_module_laws(chk, x)
    return chk.done()


def _require_cocycle_module(x: CocycleModuleData) -> None:
    rep = check_cocycle_module(x)
    if not rep.passed:
        raise InvalidModule(f"{x.name or 'structure'} is not a cocycle module: {rep.failed_laws}")


def check_cocycle_module_morphism(h: Morphism, src: CocycleModuleData, dst: CocycleModuleData,
                                  l: Morphism | None = None) -> CheckReport:
    """``(h, l)`` with ``l`` rebuilt as ``gamma'^-1 o h o gamma``."""
    Ao, Ho = src.over.A.obj, src.over.H.obj
    rebuilt = evaluate(dst.gamma_inv @ h @ src.gamma)
    chk = Checker("cocycle module morphism")
    chk.equal("h A-linear", h @ src.phiM, dst.phiM @ (Ao | h))
    chk.equal("h H-linear", h @ src.varphiM, dst.varphiM @ (Ho | h))
    chk.equal("l A-linear", rebuilt @ src.phiN, dst.phiN @ (Ao | rebuilt))
    chk.equal("h intertwines gamma", h @ src.gamma, dst.gamma @ rebuilt)
    if l is not None:
        chk.equal("l determined by h", l, rebuilt)
    return chk.done()


def regular_cocycle_module(cd: CocycleData) -> CocycleModuleData:
    """``(H, A, phi_H, mu_H, mu_A, pi)``."""
    return CocycleModuleData(cd.H.obj, cd.A.obj, cd.phi, cd.H.mult, cd.A.mult, cd.pi, cd.pi_inv, cd,
                             f"regular[{cd.name}]")


def trivial_cocycle_module(cd: CocycleData) -> CocycleModuleData:
    K = unit_of(cd.A.obj)
    one = identity(K)
    return CocycleModuleData(K, K, cd.A.counit, cd.H.counit, cd.A.counit, one, one, cd, f"trivial[{cd.name}]")


# functors


def functor_I_H(h: HopfData, m: ModuleData) -> CocycleModuleData:
    """``(M, M, phi_M, eps (x) M, phi_M, id)`` over the trivial-action cocycle of ``h``."""
    rep = check_left_module(m)
    if not rep.passed:
        raise InvalidModule(f"not a left module: {rep.failed_laws}")
    M = m.carrier
    one = identity(M)
    return CocycleModuleData(M, M, m.act, evaluate(h.counit | M), m.act, one, one, functor_H(h), "I_H")


def functor_M_fg(mor: CocycleMorphism, x: CocycleModuleData) -> CocycleModuleData:
    """Pull the actions of a module over ``mor.dst`` back along ``(f, g)``."""
    if x.over is not mor.dst and x.over != mor.dst:
        raise InvalidModule("the module does not live over the target of the morphism")
    f, g = mor.f, mor.g
    return CocycleModuleData(x.M, x.N, evaluate(x.phiM @ (f | x.M)), evaluate(x.varphiM @ (g | x.M)),
                             evaluate(x.phiN @ (f | x.N)), x.gamma, x.gamma_inv, mor.src, f"M_fg({x.name})")


def functor_G(m: BraceModuleData, check: bool = True) -> CocycleModuleData:
    """``(M, M, Gamma_M, psi1, psi2, id)`` over ``E`` of the brace."""
    if check:
        _require_brace_module(m)
    one = identity(m.carrier)
    return CocycleModuleData(m.carrier, m.carrier, gamma_M(m), m.psi1, m.psi2, one, one,
                             functor_E(m.over, False), f"G({m.name})")


def functor_Hbr_pi(x: CocycleModuleData, check: bool = True, brace: HopfBraceData | None = None) -> BraceModuleData:
    """``(M, varphi_M, gamma o phi_N o (pi^-1 (x) gamma^-1))`` over ``Q`` of the cocycle."""
    if check:
        _require_cocycle_module(x)
    cd = x.over
    q = brace or functor_Q(cd, False)
    psi2 = evaluate(x.gamma @ x.phiN @ (cd.pi_inv | x.gamma_inv))
    out = BraceModuleData(x.M, x.varphiM, psi2, q, f"Hbr({x.name})")
    if check and evaluate(x.phiM @ (cd.pi_inv | x.M)) != gamma_M(out):
        raise InternalInconsistency("phi_M o (pi^-1 (x) M) differs from Gamma_M")
    return out


def functor_J(h: HopfData, m: ModuleData) -> BraceModuleData:
    """``(M, psi, psi)`` over the trivial brace."""
    rep = check_left_module(m)
    if not rep.passed:
        raise InvalidModule(f"not a left module: {rep.failed_laws}")
    return BraceModuleData(m.carrier, m.act, m.act, trivial_brace(h), "J")


def functor_L(m: BraceModuleData) -> ModuleData:
    return ModuleData(m.carrier, m.psi1, m.over.h1.algebra)


def verify_module_equivalence(cd: CocycleData, cocycle_modules=(), brace_modules=()) -> CheckReport:
    """Round trips between modules over ``cd`` and over its brace ``Q(cd)``.

    For brace modules ``b`` over ``Q(cd)`` (given, plus the images of the
    cocycle modules) the composite ``Hbr(M_(pi,id)(G(b)))`` must return
    ``b``; for each cocycle module ``X`` the pair ``(id_M, gamma)`` must be
    an isomorphism onto its round-trip image.
    """
    chk = Checker(f"module equivalence {cd.name}".strip())
    if not chk.include(check_cocycle(cd), "cocycle "):
        return chk.done()
    q = functor_Q(cd, False)
    e = functor_E(q, False)
    mor = CocycleMorphism(cd.pi, identity(cd.H.obj), cd, e)
    targets = list(brace_modules)
    for x in cocycle_modules:
        tag = f"[{x.name}] "
        if x.over is not cd and x.over != cd:
            raise InvalidModule(f"{x.name} lives over another cocycle")
        if not chk.include(check_cocycle_module(x), tag):
            continue
        b = functor_Hbr_pi(x, check=False, brace=q)
        chk.equal(tag + "phi_M o (pi^-1 (x) M) = Gamma_M", x.phiM @ (cd.pi_inv | x.M), gamma_M(b))
        targets.append(b)
        image = functor_M_fg(mor, functor_G(b, check=False))
        expected = evaluate(x.gamma @ x.phiN @ (cd.A.obj | x.gamma_inv))
        chk.equal(tag + "image phi_M", image.phiM, x.phiM)
        chk.equal(tag + "image varphi_M", image.varphiM, x.varphiM)
        chk.equal(tag + "image phi_N", image.phiN, expected)
        chk.include(check_cocycle_module(image), tag + "image ")
        chk.include(check_cocycle_module_morphism(identity(x.M), x, image, x.gamma), tag + "(id, gamma) ")
        chk.include(check_cocycle_module_morphism(identity(x.M), image, x, x.gamma_inv), tag + "(id, gamma^-1) ")
    for b in targets:
        tag = f"[{b.name}] "
        if not chk.include(check_brace_module(b), tag):
            continue
        back = functor_Hbr_pi(functor_M_fg(mor, functor_G(b, check=False)), check=False, brace=q)
        chk.equal(tag + "round trip psi1", back.psi1, b.psi1)
        chk.equal(tag + "round trip psi2", back.psi2, b.psi2)
    return chk.done()


# tensor products


def _gate(symmetric: bool, cocommutative: list[tuple[str, object]]) -> None:
    if not symmetric:
        raise NotSymmetric("tensor products of modules need a symmetric braiding")
    for what, h in cocommutative:
        if not is_cocommutative(h):
            raise NotCocommutative(f"tensor products of modules need {what} cocommutative")


def tensor_cocycle_modules(x: CocycleModuleData, y: CocycleModuleData) -> CocycleModuleData:
    cd = x.over
    if y.over is not cd and y.over != cd:
        raise InvalidModule("modules over different cocycles")
    _gate(cd.A.obj.braid.symmetric(), [("A", cd.A), ("H", cd.H)])
    A, H = cd.A, cd.H
    return CocycleModuleData(
        tensor_objects(x.M, y.M), tensor_objects(x.N, y.N),
        diagonal_action(A, x.M, x.phiM, y.M, y.phiM),
        diagonal_action(H, x.M, x.varphiM, y.M, y.varphiM),
        diagonal_action(A, x.N, x.phiN, y.N, y.phiN),
        evaluate(x.gamma | y.gamma), evaluate(x.gamma_inv | y.gamma_inv), cd, f"{x.name}*{y.name}")


def swap_cocycle_modules(x: CocycleModuleData, y: CocycleModuleData) -> CheckReport:
    """Check that ``(c_{M,P}, c_{N,Q})`` is a morphism ``x (x) y -> y (x) x``."""
    xy, yx = tensor_cocycle_modules(x, y), tensor_cocycle_modules(y, x)
    return check_cocycle_module_morphism(evaluate(c(x.M, y.M)), xy, yx, evaluate(c(x.N, y.N)))


def tensor_brace_modules(x: BraceModuleData, y: BraceModuleData) -> BraceModuleData:
    hb = x.over
    if y.over is not hb and y.over != hb:
        raise InvalidModule("modules over different braces")
    _gate(hb.obj.braid.symmetric(), [("the brace", hb)])
    return BraceModuleData(tensor_objects(x.carrier, y.carrier),
                           diagonal_action(hb.h1, x.carrier, x.psi1, y.carrier, y.psi1),
                           diagonal_action(hb.h2, x.carrier, x.psi2, y.carrier, y.psi2), hb, f"{x.name}*{y.name}")
