"""Check reports with localized witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import Expr, Morphism, evaluate
from .errors import HbxError
from .fields import Scalar

MAX_WITNESSES = 32


@dataclass(frozen=True)
class Violation:
    """One differing matrix entry of a law.

    ``witness`` is ``(input basis indices, output basis indices)``, one
    index per wire of the source and target objects.
    """

    law: str
    witness: tuple
    lhs: Scalar | None = None
    rhs: Scalar | None = None

    def __str__(self):
        if self.lhs is None:
            return f"{self.law}: witness {self.witness}"
        return f"{self.law}: at {self.witness} lhs={self.lhs} rhs={self.rhs}"


@dataclass
class CheckReport:
    name: str
    laws: list[str] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    derived: set[str] = field(default_factory=set)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def failed_laws(self) -> list[str]:
        seen = []
        for v in self.violations:
            if v.law not in seen:
                seen.append(v.law)
        return seen

    @property
    def internal_inconsistency(self) -> bool:
        """A derived identity failed while every premise law passed."""
        failed = set(self.failed_laws)
        return bool(failed) and failed <= self.derived

    def first(self, law: str) -> Violation | None:
        return next((v for v in self.violations if v.law == law), None)

    def __bool__(self):
        return self.passed

    def lines(self) -> list[str]:
        out = [f"[{'PASS' if self.passed else 'FAIL'}] {self.name}"]
        for law in self.laws:
            v = self.first(law)
            if v is None:
                out.append(f"  pass  {law}")
            else:
                out.append(f"  FAIL  {law}  ({self.counts.get(law, 1)} entries) first: {v.witness} "
                           f"lhs={v.lhs} rhs={v.rhs}")
        if self.internal_inconsistency:
            out.append("  internal inconsistency: only derived identities failed")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _unravel(index: int, wires) -> tuple[int, ...]:
    dims = [w.dim for w in wires]
    if not dims:
        return ()
    return tuple(int(i) for i in np.unravel_index(index, dims))


def diff(law: str, lhs: Morphism, rhs: Morphism) -> tuple[list[Violation], int]:
    """Entrywise comparison of two morphisms with equal endpoints."""
    if lhs.src != rhs.src or lhs.dst != rhs.dst:
        raise HbxError(f"law {law!r} compares morphisms with different endpoints")
    if lhs.den == rhs.den and np.array_equal(lhs.num, rhs.num):
        return [], 0
    a = lhs.num.astype(object) * rhs.den
    b = rhs.num.astype(object) * lhs.den
    bad = np.argwhere(a != b)
    out = []
    for i, j in bad[:MAX_WITNESSES]:
        out.append(Violation(law, (_unravel(j, lhs.src.wires), _unravel(i, lhs.dst.wires)),
                             lhs.entry(i, j), rhs.entry(i, j)))
    return out, len(bad)


class Checker:
    """Accumulates named law checks into a :class:`CheckReport`."""

    def __init__(self, name: str):
        self.report = CheckReport(name)

    def _add_law(self, law: str, derived: bool) -> None:
        if law in self.report.laws:
            raise HbxError(f"duplicate law name {law!r}")
        self.report.laws.append(law)
        if derived:
            self.report.derived.add(law)

    def equal(self, law: str, lhs: Expr | Callable, rhs: Expr | Callable, derived: bool = False) -> bool:
        self._add_law(law, derived)
        lhs = evaluate(lhs() if callable(lhs) and not isinstance(lhs, Expr) else lhs)
        rhs = evaluate(rhs() if callable(rhs) and not isinstance(rhs, Expr) else rhs)
        vs, n = diff(law, lhs, rhs)
        if vs:
            self.report.violations.extend(vs)
            self.report.counts[law] = n
        return not vs

    def require(self, law: str, ok: bool, witness: tuple = (), derived: bool = False) -> bool:
        self._add_law(law, derived)
        if not ok:
            self.report.violations.append(Violation(law, witness))
            self.report.counts[law] = 1
        return ok

    def include(self, sub: CheckReport, prefix: str = "") -> bool:
        """Fold a sub-report in, prefixing its law names."""
        for law in sub.laws:
            self._add_law(prefix + law, law in sub.derived)
        for v in sub.violations:
            self.report.violations.append(Violation(prefix + v.law, v.witness, v.lhs, v.rhs))
        for law, n in sub.counts.items():
            self.report.counts[prefix + law] = n
        return sub.passed

    def skip(self, law: str, reason: str) -> None:
        """Record that a law was not evaluated because a premise failed."""
        self._add_law(law, False)
        self.report.violations.append(Violation(law, ("skipped", reason)))
        self.report.counts[law] = 0

    def done(self) -> CheckReport:
        return self.report
