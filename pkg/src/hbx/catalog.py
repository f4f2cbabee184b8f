"""The standard collection of named instances and the full verification run."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .brace import HopfBraceData, check_hopf_brace, is_cocommutative, trivial_brace
from .cocycle import (CocycleData, check_cocycle, functor_E, functor_H, transport_source,
                      verify_ic_hbr_equivalence, verify_phi_prime_theorem)
from .constructions import (braided_line, cyclic, direct_product, dual_group_algebra, group_algebra,
                            linearize_skew_brace, permutation_matrix, super_exterior_line, symmetric3)
from .fields import Q, PrimeField
from .hopf import HopfData, check_hopf
from .modules import (check_brace_module, check_cocycle_module, check_zhu_condition, regular_brace_module,
                      regular_cocycle_module, swap_cocycle_modules, tensor_brace_modules, tensor_cocycle_modules,
                      trivial_brace_module, trivial_cocycle_module, verify_module_equivalence)
from .report import CheckReport
from .skew import check_skew_brace, enumerate_skew_braces

F5, F7 = PrimeField(5), PrimeField(7)

GROUPS = (
    ("C1", lambda: cyclic(1)),
    ("C2", lambda: cyclic(2)),
    ("C3", lambda: cyclic(3)),
    ("C4", lambda: cyclic(4)),
    ("C2xC2", lambda: direct_product(cyclic(2), cyclic(2))),
    ("S3", symmetric3),
)
FIELDS = (("Q", Q), ("F5", F5), ("F7", F7))
MAX_BRACE_ORDER = 6


@dataclass
class Catalog:
    hopf: dict[str, HopfData]
    braces: dict[str, HopfBraceData]
    cocycles: dict[str, CocycleData]
    skew: dict[str, object]
    brace_modules: dict[str, object]
    cocycle_modules: dict[str, object]

    def size(self) -> int:
        return sum(len(d) for d in (self.hopf, self.braces, self.cocycles, self.brace_modules,
                                    self.cocycle_modules))

    def get(self, name: str):
        for d in (self.hopf, self.braces, self.cocycles, self.skew, self.brace_modules, self.cocycle_modules):
            if name in d:
                return d[name]
        raise KeyError(name)


def _named(obj, name: str):
    object.__setattr__(obj, "name", name)
    return obj


@lru_cache(maxsize=1)
def catalog() -> Catalog:
    hopf: dict[str, HopfData] = {}
    for gname, make in GROUPS:
        for fname, field in FIELDS:
            name = f"k[{gname}]/{fname}"
            hopf[name] = group_algebra(make(), field, name=name)
    hopf["k^[S3]/Q"] = dual_group_algebra(symmetric3(), Q, name="k^[S3]/Q")
    hopf["exterior line/Q"] = _named(super_exterior_line(Q), "exterior line/Q")
    hopf["braided line 3/F7"] = _named(braided_line(3, F7), "braided line 3/F7")

    braces: dict[str, HopfBraceData] = {}
    for name, h in hopf.items():
        braces[f"trivial {name}"] = _named(trivial_brace(h), f"trivial {name}")
    skew = {}
    for n in range(1, MAX_BRACE_ORDER + 1):
        for k, t in enumerate(enumerate_skew_braces(n, up_to_iso=True).braces):
            name = f"skew {n}.{k}"
            skew[name] = t
            braces[f"lin {name}/Q"] = linearize_skew_brace(t, Q, name=f"lin {name}/Q")

    cocycles: dict[str, CocycleData] = {}
    for name, h in hopf.items():
        cocycles[f"H({name})"] = _named(functor_H(h), f"H({name})")
    for name, hb in braces.items():
        if name.startswith("lin "):
            cocycles[f"E({name})"] = _named(functor_E(hb, check=False), f"E({name})")
    # cocycles whose pi is not the identity
    for name, perm in (("E(lin skew 6.5/Q)", (0, 2, 1, 4, 5, 3)), ("E(lin skew 4.1/Q)", (0, 3, 1, 2))):
        base = cocycles[name]
        cocycles[f"{name}^sigma"] = transport_source(base, permutation_matrix(base.A.obj, perm), f"{name}^sigma")

    brace_modules = {}
    for name, hb in braces.items():
        for m in (regular_brace_module(hb), trivial_brace_module(hb)):
            brace_modules[m.name] = m
    cocycle_modules = {}
    for name, cd in cocycles.items():
        for m in (regular_cocycle_module(cd), trivial_cocycle_module(cd)):
            cocycle_modules[m.name] = m
    return Catalog(hopf, braces, cocycles, skew, brace_modules, cocycle_modules)


def _monoidal_report(cd: CocycleData) -> CheckReport:
    from .report import Checker
    chk = Checker(f"tensor products over {cd.name}")
    mods = [regular_cocycle_module(cd), trivial_cocycle_module(cd)]
    for i, x in enumerate(mods):
        for j, y in enumerate(mods):
            xy = tensor_cocycle_modules(x, y)
            chk.include(check_cocycle_module(xy), f"[{i}{j}] ")
            chk.include(swap_cocycle_modules(x, y), f"[{i}{j}] swap ")
    return chk.done()


def _brace_monoidal_report(hb: HopfBraceData) -> CheckReport:
    from .report import Checker
    chk = Checker(f"brace module tensor products over {hb.name}")
    mods = [regular_brace_module(hb), trivial_brace_module(hb)]
    for i, x in enumerate(mods):
        for j, y in enumerate(mods):
            chk.include(check_brace_module(tensor_brace_modules(x, y)), f"[{i}{j}] ")
    return chk.done()


def _symmetric_cocommutative(cd: CocycleData) -> bool:
    return cd.A.obj.braid.symmetric() and is_cocommutative(cd.A) and is_cocommutative(cd.H)


def tasks() -> list[tuple[str, str, Callable[[], CheckReport]]]:
    """Every check of the full run as ``(kind, instance, thunk)``, in a fixed order."""
    cat = catalog()
    out: list[tuple[str, str, Callable[[], CheckReport]]] = []
    for name, t in cat.skew.items():
        out.append(("skew brace", name, lambda t=t: check_skew_brace(t)))
    for name, h in cat.hopf.items():
        out.append(("hopf", name, lambda h=h: check_hopf(h)))
    for name, hb in cat.braces.items():
        out.append(("brace", name, lambda hb=hb: check_hopf_brace(hb)))
    for name, cd in cat.cocycles.items():
        out.append(("cocycle", name, lambda cd=cd: check_cocycle(cd)))
    for name, m in cat.brace_modules.items():
        out.append(("brace module", name, lambda m=m: check_brace_module(m)))
    for name, m in cat.cocycle_modules.items():
        out.append(("cocycle module", name, lambda m=m: check_cocycle_module(m)))
    for name, hb in cat.braces.items():
        out.append(("QE = id", name, lambda hb=hb: verify_ic_hbr_equivalence(braces=[hb])))
    for name, cd in cat.cocycles.items():
        out.append(("EQ iso", name, lambda cd=cd: verify_ic_hbr_equivalence(cocycles=[cd])))
        out.append(("companion action", name, lambda cd=cd: verify_phi_prime_theorem(
            cd.A, cd.H, cd.pi, phi=cd.phi, pi_inv=cd.pi_inv)))
        mods = [m for m in cat.cocycle_modules.values() if m.over is cd]
        out.append(("module equivalence", name, lambda cd=cd, mods=mods: verify_module_equivalence(cd, mods)))
        if _symmetric_cocommutative(cd):
            out.append(("monoidal", name, lambda cd=cd: _monoidal_report(cd)))
    for name, hb in cat.braces.items():
        mods = [m for m in cat.brace_modules.values() if m.over is hb]
        out.append(("brace module trip", name, lambda hb=hb, mods=mods: verify_module_equivalence(
            functor_E(hb, check=False), brace_modules=mods)))
    for name, hb in cat.braces.items():
        if hb.obj.braid.symmetric() and is_cocommutative(hb):
            out.append(("brace monoidal", name, lambda hb=hb: _brace_monoidal_report(hb)))
    return out


@dataclass(frozen=True)
class Outcome:
    kind: str
    name: str
    passed: bool
    laws: int
    failed: tuple[str, ...]
    detail: tuple[str, ...]
    law_names: tuple[str, ...] = ()

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark}  {self.kind:<18} {self.name:<40} {self.laws:>5} laws"


def _outcome(kind: str, name: str, rep: CheckReport) -> Outcome:
    detail = () if rep.passed else tuple(rep.lines()[1:])
    return Outcome(kind, name, rep.passed, len(rep.laws), tuple(rep.failed_laws), detail, tuple(rep.laws))


def _run_one(i: int) -> Outcome:
    kind, name, thunk = tasks()[i]
    return _outcome(kind, name, thunk())


def threads() -> int:
    try:
        return max(1, int(os.environ.get("HBX_THREADS", "1")))
    except ValueError:
        return 1


def run_all(workers: int | None = None, extra: list[tuple[str, str, Callable[[], CheckReport]]] = ()) -> list[Outcome]:
    """Run every task; results come back in task order whatever the parallelism."""
    workers = threads() if workers is None else workers
    n = len(tasks())
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, range(n), chunksize=max(1, n // (4 * workers))))
    else:
        results = [_run_one(i) for i in range(n)]
    for kind, name, thunk in extra:
        results.append(_outcome(kind, name, thunk()))
    return results


def zhu_report() -> list[tuple[str, bool, bool]]:
    """``(module, brace cocommutative, condition holds)`` for every catalog brace module."""
    out = []
    for name, m in catalog().brace_modules.items():
        out.append((name, is_cocommutative(m.over), check_zhu_condition(m)))
    return out


def render(results: list[Outcome]) -> str:
    lines = [r.line() for r in results]
    for r in results:
        if not r.passed:
            lines.append(f"-- {r.kind} {r.name}")
            lines.extend(r.detail)
    total, bad = len(results), sum(not r.passed for r in results)
    lines.append(f"{total - bad}/{total} checks passed")
    return "\n".join(lines) + "\n"
