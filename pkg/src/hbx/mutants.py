"""Single-entry mutants of catalog instances.

A mutant changes one matrix entry of one structure map (or one cell of a
group table).  The shipped registry pins, for each mutant, the law it is
meant to break and the complete list of laws its checker reports as
failing.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from importlib import resources

from .brace import HopfBraceData, check_hopf_brace
from .catalog import catalog
from .cocycle import CocycleData, check_cocycle
from .core import Morphism
from .hopf import HopfData, check_hopf
from .modules import BraceModuleData, CocycleModuleData, check_brace_module, check_cocycle_module
from .report import CheckReport
from .skew import GroupTable, SkewBraceTable, check_skew_brace


@dataclass(frozen=True)
class Mutant:
    id: str
    base: str
    component: str
    entry: tuple[int, int]
    value: str
    target: str
    fails: tuple[str, ...]

    @classmethod
    def from_json(cls, d: dict) -> "Mutant":
        return cls(d["id"], d["base"], d["component"], tuple(d["entry"]), str(d["value"]), d["target"],
                   tuple(d["fails"]))

    def to_json(self) -> dict:
        return {"id": self.id, "base": self.base, "component": self.component, "entry": list(self.entry),
                "value": self.value, "target": self.target, "fails": list(self.fails)}


def checker_for(obj) -> callable:
    if isinstance(obj, HopfData):
        return check_hopf
    if isinstance(obj, HopfBraceData):
        return check_hopf_brace
    if isinstance(obj, CocycleData):
        return check_cocycle
    if isinstance(obj, BraceModuleData):
        return check_brace_module
    if isinstance(obj, CocycleModuleData):
        return check_cocycle_module
    if isinstance(obj, SkewBraceTable):
        return check_skew_brace
    raise TypeError(type(obj).__name__)


def components(obj) -> list[str]:
    if isinstance(obj, HopfData):
        return ["unit", "mult", "counit", "comult", "antipode"]
    if isinstance(obj, HopfBraceData):
        return list(obj.parts())
    if isinstance(obj, CocycleData):
        return ["phi", "pi", "pi_inv"]
    if isinstance(obj, BraceModuleData):
        return ["psi1", "psi2"]
    if isinstance(obj, CocycleModuleData):
        return ["phiM", "varphiM", "phiN", "gamma", "gamma_inv"]
    if isinstance(obj, SkewBraceTable):
        return ["diamond", "circ"]
    raise TypeError(type(obj).__name__)


def _set_cell(g: GroupTable, i: int, j: int, v: int) -> GroupTable:
    rows = [list(r) for r in g.op]
    rows[i][j] = v
    return GroupTable.from_rows(rows, g.e)


def mutate(obj, component: str, entry: tuple[int, int], value):
    """Copy of ``obj`` with one entry of one component replaced."""
    i, j = entry
    part = getattr(obj, component)
    if isinstance(part, GroupTable):
        new = _set_cell(part, i, j, int(value))
    elif isinstance(part, Morphism):
        new = part.with_entry(i, j, value)
    else:
        raise TypeError(f"cannot mutate {component}")
    return dataclasses.replace(obj, **{component: new})


def build(m: Mutant):
    return mutate(catalog().get(m.base), m.component, m.entry, m.value)


def run(m: Mutant) -> CheckReport:
    obj = build(m)
    return checker_for(obj)(obj)


def primary_failures(rep: CheckReport) -> list[str]:
    return [law for law in rep.failed_laws if law not in rep.derived]


def registry() -> list[Mutant]:
    """The shipped mutants."""
    text = resources.files("hbx.data").joinpath("mutants.json").read_text(encoding="utf-8")
    return [Mutant.from_json(d) for d in json.loads(text)]


def find(mutant_id: str) -> Mutant:
    for m in registry():
        if m.id == mutant_id:
            return m
    raise KeyError(mutant_id)


def candidate_values(obj, component: str, entry: tuple[int, int]) -> list:
    part = getattr(obj, component)
    i, j = entry
    if isinstance(part, GroupTable):
        cur = part.op[i][j]
        return [v for v in range(part.n) if v != cur]
    cur = part.entry(i, j)
    vals = [cur + 1]
    if not cur.is_zero():
        vals.append(part.field(0))
    return vals


def search(bases: list[str], max_fail: int = 4):
    """Yield ``(base, component, entry, value, report)`` for failing mutants.

    Only degree-preserving changes are tried; ``max_fail`` bounds the
    total number of failing laws.
    """
    cat = catalog()
    for base in bases:
        obj = cat.get(base)
        check = checker_for(obj)
        for comp in components(obj):
            part = getattr(obj, comp)
            rows, cols = (part.n, part.n) if isinstance(part, GroupTable) else part.shape
            for i in range(rows):
                for j in range(cols):
                    if not isinstance(part, GroupTable) and part.dst.grading[i] != part.src.grading[j]:
                        continue
                    for v in candidate_values(obj, comp, (i, j)):
                        rep = check(mutate(obj, comp, (i, j), v))
                        if 0 < len(rep.failed_laws) <= max_fail:
                            yield base, comp, (i, j), v, rep
