"""Hopf braces: one coalgebra carrying two compatible Hopf algebra structures."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Morphism, c, evaluate
from .errors import InvalidBrace
from .hopf import (HopfData, algebra_morphism_laws, coalgebra_morphism_laws, hopf_laws, is_cocommutative,
                   module_algebra_laws, require_hopf, tensor_coalgebra)
from .report import Checker, CheckReport

__all__ = [
    "HopfBraceData", "check_brace_morphism", "check_hopf_brace", "gamma1", "gamma_prime",
    "is_cocommutative", "require_hopf_brace", "trivial_brace",
]


@dataclass(frozen=True)
class HopfBraceData:
    """``(H, mu1, eta1, lam1)`` and ``(H, mu2, eta2, lam2)`` over ``(H, eps, delta)``."""

    obj: object
    counit: Morphism
    comult: Morphism
    unit1: Morphism
    mult1: Morphism
    antipode1: Morphism
    unit2: Morphism
    mult2: Morphism
    antipode2: Morphism
    name: str = field(default="", compare=False)

    def __post_init__(self):
        # HopfData validates the shapes
        HopfData(self.obj, self.unit1, self.mult1, self.counit, self.comult, self.antipode1)
        HopfData(self.obj, self.unit2, self.mult2, self.counit, self.comult, self.antipode2)

    @property
    def h1(self) -> HopfData:
        return HopfData(self.obj, self.unit1, self.mult1, self.counit, self.comult, self.antipode1,
                        f"{self.name} H1")

    @property
    def h2(self) -> HopfData:
        return HopfData(self.obj, self.unit2, self.mult2, self.counit, self.comult, self.antipode2,
                        f"{self.name} H2")

    def parts(self) -> dict[str, Morphism]:
        keys = ("counit", "comult", "unit1", "mult1", "antipode1", "unit2", "mult2", "antipode2")
        return {k: getattr(self, k) for k in keys}


def gamma1(hb: HopfBraceData) -> Morphism:
    """``mu1 o (lam1 (x) mu2) o (delta (x) H)``."""
    H = hb.obj
    return evaluate(hb.mult1 @ (hb.antipode1 | hb.mult2) @ (hb.comult | H))


def gamma_prime(hb: HopfBraceData) -> Morphism:
    """``mu1 o (mu2 (x) lam1) o (H (x) c_{H,H}) o (delta (x) H)``."""
    H = hb.obj
    return evaluate(hb.mult1 @ (hb.mult2 | hb.antipode1) @ (H | c(H, H)) @ (hb.comult | H))


def hopf_brace_laws(chk: Checker, hb: HopfBraceData, prefix: str = "") -> bool:
    before = len(chk.report.violations)
    ok1 = hopf_laws(chk, hb.h1, prefix + "H1 ")
    ok2 = hopf_laws(chk, hb.h2, prefix + "H2 ")
    if not (ok1 and ok2):
        return False
    H, delta = hb.obj, hb.comult
    mu1, mu2, lam1 = hb.mult1, hb.mult2, hb.antipode1
    g, gp = gamma1(hb), gamma_prime(hb)
    chk.equal(prefix + "shared unit", hb.unit1, hb.unit2)
    chk.equal(prefix + "brace compatibility",
              mu2 @ (H | mu1),
              mu1 @ (mu2 | g) @ (H | c(H, H) | H) @ (delta | H | H))
    # consequences of the axioms
    chk.equal(prefix + "Gamma against antipode",
              g @ (H | lam1),
              mu1 @ ((lam1 @ mu2) | H) @ (H | c(H, H)) @ (delta | H), derived=True)
    chk.equal(prefix + "mu2 through Gamma", mu2, mu1 @ (H | g) @ (delta | H), derived=True)
    chk.equal(prefix + "brace compatibility through Gamma'",
              mu2 @ (H | mu1),
              mu1 @ (gp | mu2) @ (H | c(H, H) | H) @ (delta | H | H), derived=True)
    chk.equal(prefix + "mu2 through Gamma'", mu2, mu1 @ (gp | H) @ (H | c(H, H)) @ (delta | H), derived=True)
    module_algebra_laws(chk, hb.h1.algebra, g, hb.h2, prefix + "Gamma ", derived=True)
    module_algebra_laws(chk, hb.h1.algebra, gp, hb.h2, prefix + "Gamma' ", derived=True)
    if is_cocommutative(hb):
        hc = hb.h1.coalgebra
        hhc = tensor_coalgebra(hc, hc)
        coalgebra_morphism_laws(chk, g, hhc, hc, prefix + "Gamma ", derived=True)
        coalgebra_morphism_laws(chk, gp, hhc, hc, prefix + "Gamma' ", derived=True)
    return len(chk.report.violations) == before


def check_hopf_brace(hb: HopfBraceData) -> CheckReport:
    chk = Checker(f"hopf brace {hb.name}".strip())
    hopf_brace_laws(chk, hb)
    return chk.done()


def require_hopf_brace(hb: HopfBraceData) -> None:
    rep = check_hopf_brace(hb)
    if not rep.passed:
        raise InvalidBrace(f"{hb.name or 'structure'} is not a Hopf brace: {rep.failed_laws}")


def trivial_brace(h: HopfData) -> HopfBraceData:
    """Both Hopf structures equal to ``h``."""
    require_hopf(h)
    return HopfBraceData(h.obj, h.counit, h.comult, h.unit, h.mult, h.antipode,
                         h.unit, h.mult, h.antipode, f"trivial brace on {h.name}".strip())


def check_brace_morphism(x: Morphism, src: HopfBraceData, dst: HopfBraceData) -> CheckReport:
    """``x`` is a coalgebra map and an algebra map for both structures."""
    chk = Checker("brace morphism")
    algebra_morphism_laws(chk, x, src.h1.algebra, dst.h1.algebra, "first ")
    algebra_morphism_laws(chk, x, src.h2.algebra, dst.h2.algebra, "second ")
    coalgebra_morphism_laws(chk, x, src.h1.coalgebra, dst.h1.coalgebra)
    return chk.done()
