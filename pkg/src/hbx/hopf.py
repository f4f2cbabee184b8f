"""Algebras, coalgebras, Hopf algebras and modules as structure-constant data.

All axioms are checked as exact equalities of matrices.  The formulas are
written as string diagrams with ``@`` for composition and ``|`` for the
tensor product; ``c(X, Y)`` is the braiding.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import FinObject, Morphism, c, evaluate, identity, tensor_objects, unit_object
from .errors import InvalidHopf, ShapeMismatch
from .report import Checker, CheckReport


def _expect(m: Morphism, src: FinObject, dst: FinObject, what: str) -> None:
    if m.src != src or m.dst != dst:
        raise ShapeMismatch(f"{what}: expected {src!r} -> {dst!r}, got {m.src!r} -> {m.dst!r}")


def unit_of(x: FinObject) -> FinObject:
    return unit_object(x.field, x.braid)


@dataclass(frozen=True)
class AlgebraData:
    obj: FinObject
    unit: Morphism
    mult: Morphism

    def __post_init__(self):
        a = self.obj
        _expect(self.unit, unit_of(a), a, "unit")
        _expect(self.mult, tensor_objects(a, a), a, "mult")


@dataclass(frozen=True)
class CoalgebraData:
    obj: FinObject
    counit: Morphism
    comult: Morphism

    def __post_init__(self):
        d = self.obj
        _expect(self.counit, d, unit_of(d), "counit")
        _expect(self.comult, d, tensor_objects(d, d), "comult")


@dataclass(frozen=True)
class HopfData:
    obj: FinObject
    unit: Morphism
    mult: Morphism
    counit: Morphism
    comult: Morphism
    antipode: Morphism
    name: str = field(default="", compare=False)

    def __post_init__(self):
        h = self.obj
        _expect(self.unit, unit_of(h), h, "unit")
        _expect(self.mult, tensor_objects(h, h), h, "mult")
        _expect(self.counit, h, unit_of(h), "counit")
        _expect(self.comult, h, tensor_objects(h, h), "comult")
        _expect(self.antipode, h, h, "antipode")

    @property
    def algebra(self) -> AlgebraData:
        return AlgebraData(self.obj, self.unit, self.mult)

    @property
    def coalgebra(self) -> CoalgebraData:
        return CoalgebraData(self.obj, self.counit, self.comult)


@dataclass(frozen=True)
class ModuleData:
    carrier: FinObject
    act: Morphism
    over: AlgebraData

    def __post_init__(self):
        _expect(self.act, tensor_objects(self.over.obj, self.carrier), self.carrier, "action")


# axiom checkers


def algebra_laws(chk: Checker, a: AlgebraData, prefix: str = "") -> None:
    A, eta, mu = a.obj, a.unit, a.mult
    chk.equal(prefix + "right unit", mu @ (A | eta), identity(A))
    chk.equal(prefix + "left unit", mu @ (eta | A), identity(A))
    chk.equal(prefix + "associativity", mu @ (A | mu), mu @ (mu | A))


def coalgebra_laws(chk: Checker, d: CoalgebraData, prefix: str = "") -> None:
    D, eps, delta = d.obj, d.counit, d.comult
    chk.equal(prefix + "left counit", (eps | D) @ delta, identity(D))
    chk.equal(prefix + "right counit", (D | eps) @ delta, identity(D))
    chk.equal(prefix + "coassociativity", (delta | D) @ delta, (D | delta) @ delta)


def check_algebra(a: AlgebraData) -> CheckReport:
    chk = Checker("algebra")
    algebra_laws(chk, a)
    return chk.done()


def check_coalgebra(d: CoalgebraData) -> CheckReport:
    chk = Checker("coalgebra")
    coalgebra_laws(chk, d)
    return chk.done()


def tensor_algebra(a: AlgebraData, b: AlgebraData) -> AlgebraData:
    """The braided tensor product algebra ``A (x) B``."""
    A, B = a.obj, b.obj
    obj = tensor_objects(A, B)
    unit = evaluate(a.unit | b.unit)
    mult = evaluate((a.mult | b.mult) @ (A | c(B, A) | B))
    return AlgebraData(obj, unit, mult)


def tensor_coalgebra(d: CoalgebraData, e: CoalgebraData) -> CoalgebraData:
    D, E = d.obj, e.obj
    obj = tensor_objects(D, E)
    counit = evaluate(d.counit | e.counit)
    comult = evaluate((D | c(D, E) | E) @ (d.comult | e.comult))
    return CoalgebraData(obj, counit, comult)


def convolve(f: Morphism, g: Morphism, d: CoalgebraData, a: AlgebraData) -> Morphism:
    """``f * g = mu_A o (f (x) g) o delta_D``."""
    for m in (f, g):
        _expect(m, d.obj, a.obj, "convolution operand")
    return evaluate(a.mult @ (f | g) @ d.comult)


def convolution_unit(d: CoalgebraData, a: AlgebraData) -> Morphism:
    return evaluate(a.unit @ d.counit)


def bialgebra_laws(chk: Checker, h: HopfData, prefix: str = "") -> None:
    H = h.obj
    hh = tensor_algebra(h.algebra, h.algebra)
    K = unit_of(H)
    chk.equal(prefix + "comult multiplicative", h.comult @ h.mult, hh.mult @ (h.comult | h.comult))
    chk.equal(prefix + "comult unital", h.comult @ h.unit, h.unit | h.unit)
    chk.equal(prefix + "counit multiplicative", h.counit @ h.mult, h.counit | h.counit)
    chk.equal(prefix + "counit unital", h.counit @ h.unit, identity(K))


def check_bialgebra(h: HopfData) -> CheckReport:
    chk = Checker("bialgebra")
    algebra_laws(chk, h.algebra)
    coalgebra_laws(chk, h.coalgebra)
    bialgebra_laws(chk, h)
    return chk.done()


def antipode_laws(chk: Checker, h: HopfData, prefix: str = "") -> None:
    H, lam = h.obj, h.antipode
    unit = convolution_unit(h.coalgebra, h.algebra)
    chk.equal(prefix + "antipode (id*S)", h.mult @ (H | lam) @ h.comult, unit)
    chk.equal(prefix + "antipode (S*id)", h.mult @ (lam | H) @ h.comult, unit)
    # consequences of the antipode axiom
    chk.equal(prefix + "antimultiplicative", lam @ h.mult, h.mult @ (lam | lam) @ c(H, H), derived=True)
    chk.equal(prefix + "anticomultiplicative", h.comult @ lam, c(H, H) @ (lam | lam) @ h.comult, derived=True)
    chk.equal(prefix + "antipode unit", lam @ h.unit, h.unit, derived=True)
    chk.equal(prefix + "antipode counit", h.counit @ lam, h.counit, derived=True)


def hopf_laws(chk: Checker, h: HopfData, prefix: str = "") -> bool:
    """Bialgebra laws, then (only if they hold) the antipode laws."""
    before = len(chk.report.violations)
    algebra_laws(chk, h.algebra, prefix)
    coalgebra_laws(chk, h.coalgebra, prefix)
    bialgebra_laws(chk, h, prefix)
    if len(chk.report.violations) == before:
        antipode_laws(chk, h, prefix)
    return len(chk.report.violations) == before


def check_hopf(h: HopfData) -> CheckReport:
    chk = Checker(f"hopf {h.name}".strip())
    hopf_laws(chk, h)
    return chk.done()


def require_hopf(h: HopfData) -> None:
    rep = check_hopf(h)
    if not rep.passed:
        raise InvalidHopf(f"{h.name or 'structure'} is not a Hopf algebra: {rep.failed_laws}")


def module_laws(chk: Checker, a: AlgebraData, m: FinObject, act: Morphism, prefix: str = "",
                derived: bool = False) -> None:
    A = a.obj
    chk.equal(prefix + "module unit", act @ (a.unit | m), identity(m), derived)
    chk.equal(prefix + "module associativity", act @ (A | act), act @ (a.mult | m), derived)


def check_left_module(m: ModuleData) -> CheckReport:
    chk = Checker("left module")
    module_laws(chk, m.over, m.carrier, m.act)
    return chk.done()


def diagonal_action(h: HopfData, m: FinObject, act_m: Morphism, p: FinObject, act_p: Morphism) -> Morphism:
    """``(phi_M (x) phi_P) o (H (x) c_{H,M} (x) P) o (delta (x) M (x) P)``."""
    H = h.obj
    return evaluate((act_m | act_p) @ (H | c(H, m) | p) @ (h.comult | m | p))


def module_algebra_laws(chk: Checker, b: AlgebraData, act: Morphism, d: HopfData, prefix: str = "",
                        derived: bool = False) -> None:
    D, B = d.obj, b.obj
    module_laws(chk, d.algebra, B, act, prefix, derived)
    act_bb = diagonal_action(d, B, act, B, act)
    chk.equal(prefix + "action preserves unit", act @ (D | b.unit), d.counit | b.unit, derived)
    chk.equal(prefix + "action preserves product", act @ (D | b.mult), b.mult @ act_bb, derived)


def check_module_algebra(b: AlgebraData, act: Morphism, d: HopfData) -> CheckReport:
    _expect(act, tensor_objects(d.obj, b.obj), b.obj, "action")
    chk = Checker("module algebra")
    module_algebra_laws(chk, b, act, d)
    return chk.done()


def algebra_morphism_laws(chk: Checker, f: Morphism, a: AlgebraData, b: AlgebraData, prefix: str = "") -> None:
    chk.equal(prefix + "multiplicative", b.mult @ (f | f), f @ a.mult)
    chk.equal(prefix + "unital", f @ a.unit, b.unit)


def coalgebra_morphism_laws(chk: Checker, f: Morphism, d: CoalgebraData, e: CoalgebraData,
                            prefix: str = "", derived: bool = False) -> None:
    chk.equal(prefix + "comultiplicative", (f | f) @ d.comult, e.comult @ f, derived)
    chk.equal(prefix + "counital", e.counit @ f, d.counit, derived)


def is_commutative(h) -> bool:
    H = h.obj
    return evaluate(h.mult @ c(H, H)) == h.mult


def is_cocommutative(h) -> bool:
    """``c_{H,H} o delta = delta`` on anything with ``obj`` and ``comult``."""
    H = h.obj
    return evaluate(c(H, H) @ h.comult) == h.comult


def trivial_action(h: HopfData, m: FinObject) -> Morphism:
    return evaluate(h.counit | m)


def adjoint_action(h: HopfData) -> Morphism:
    """``mu o (mu (x) S) o (H (x) c_{H,H}) o (delta (x) H)``."""
    H = h.obj
    return evaluate(h.mult @ (h.mult | h.antipode) @ (H | c(H, H)) @ (h.comult | H))


def regular_module(h: HopfData) -> ModuleData:
    return ModuleData(h.obj, h.mult, h.algebra)


def trivial_module(h: HopfData) -> ModuleData:
    K = unit_of(h.obj)
    return ModuleData(K, h.counit, h.algebra)


def transport(h: HopfData, sigma: Morphism, sigma_inv: Morphism, name: str = "") -> HopfData:
    """The Hopf structure carried along the isomorphism ``sigma: H -> H'``."""
    return HopfData(sigma.dst, evaluate(sigma @ h.unit), evaluate(sigma @ h.mult @ (sigma_inv | sigma_inv)),
                    evaluate(h.counit @ sigma_inv), evaluate((sigma | sigma) @ h.comult @ sigma_inv),
                    evaluate(sigma @ h.antipode @ sigma_inv), name or h.name)
