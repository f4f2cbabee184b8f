"""Command line entry point.

Exit codes: 0 when every law holds, 1 when some law fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as cat
from .brace import check_hopf_brace
from .cocycle import check_cocycle, functor_E, verify_ic_hbr_equivalence
from .errors import HbxError, InvalidInput
from .hopf import check_hopf, check_left_module
from .modules import check_brace_module, check_cocycle_module, verify_module_equivalence
from .report import CheckReport
from .serialize import load_path
from .skew import MAX_ORDER, enumerate_skew_braces

SUITES = {
    "hopf": ("hopf",),
    "brace": ("hopf_brace",),
    "cocycle": ("cocycle",),
    "module": ("module", "brace_module", "cocycle_module"),
}


def _emit(reports: list[CheckReport]) -> int:
    for rep in reports:
        print(rep)
    return 0 if all(r.passed for r in reports) else 1


def _check_structure(kind: str, obj) -> CheckReport:
    if kind == "hopf":
        return check_hopf(obj)
    if kind == "hopf_brace":
        return check_hopf_brace(obj)
    if kind == "cocycle":
        return check_cocycle(obj)
    if kind == "module":
        h, m = obj
        from .report import Checker
        chk = Checker("left module")
        if chk.include(check_hopf(h), "hopf "):
            chk.include(check_left_module(m))
        return chk.done()
    if kind == "brace_module":
        return check_brace_module(obj, check_over=True)
    return check_cocycle_module(obj, check_over=True)


def cmd_check(args) -> int:
    kind, obj = load_path(args.path)
    if args.suite != "auto" and kind not in SUITES[args.suite]:
        raise InvalidInput(f"suite {args.suite!r} does not apply to a {kind} file")
    return _emit([_check_structure(kind, obj)])


def cmd_roundtrip(args) -> int:
    kind, obj = load_path(args.path)
    if kind == "hopf_brace":
        rep = verify_ic_hbr_equivalence(braces=[obj])
        if rep.passed:
            return _emit([rep, verify_ic_hbr_equivalence(cocycles=[functor_E(obj, check=False)])])
        return _emit([rep])
    if kind == "cocycle":
        return _emit([verify_ic_hbr_equivalence(cocycles=[obj])])
    if kind == "cocycle_module":
        return _emit([verify_module_equivalence(obj.over, [obj])])
    if kind == "brace_module":
        rep = check_hopf_brace(obj.over)
        if not rep.passed:
            return _emit([rep])
        return _emit([verify_module_equivalence(functor_E(obj.over, check=False), [], [obj])])
    raise InvalidInput(f"roundtrip needs a hopf_brace, cocycle or module bundle, not {kind}")


def census_json(order: int, up_to_iso: bool, workers: int | None = None) -> str:
    census = enumerate_skew_braces(order, up_to_iso=up_to_iso, workers=workers)
    doc = {
        "order": order,
        "up_to_iso": up_to_iso,
        "count": census.count,
        "braces": [{"diamond": [list(r) for r in t.diamond.op], "circ": [list(r) for r in t.circ.op]}
                   for t in census.braces],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def cmd_enumerate(args) -> int:
    if not 1 <= args.order <= MAX_ORDER:
        raise InvalidInput(f"--order must lie in [1, {MAX_ORDER}]")
    text = census_json(args.order, args.up_to_iso)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        count = json.loads(text)["count"]
        print(f"order {args.order}{' up to isomorphism' if args.up_to_iso else ''}: {count} skew braces")
    else:
        sys.stdout.write(text)
    return 0


def catalog_report(inject: str | None = None) -> tuple[str, bool]:
    extra = []
    if inject:
        from . import mutants
        try:
            m = mutants.find(inject)
        except KeyError:
            raise InvalidInput(f"unknown mutant {inject!r}") from None
        extra.append(("mutant", m.id, lambda: mutants.run(m)))
    results = cat.run_all(extra=extra)
    text = cat.render(results)
    zhu = cat.zhu_report()
    failing = [name for name, _, ok in zhu if not ok]
    noncoco = [name for name, coco, _ in zhu if not coco]
    text += (f"zhu condition: checked {len(zhu)} brace modules "
             f"({len(noncoco)} over non-cocommutative braces); failing: {', '.join(failing) or 'none'}\n")
    return text, all(r.passed for r in results)


def cmd_catalog(args) -> int:
    if not args.run_all:
        c = cat.catalog()
        for group in ("hopf", "braces", "cocycles", "brace_modules", "cocycle_modules"):
            for name in getattr(c, group):
                print(f"{group:<16} {name}")
        return 0
    text, ok = catalog_report(args.inject_mutant)
    sys.stdout.write(text)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hbx", description="Exact checks for Hopf braces and 1-cocycles.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run the checker suite on a structure file")
    c.add_argument("path")
    c.add_argument("--suite", choices=["auto", *SUITES], default="auto")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("roundtrip", help="verify the functor round trips on a structure file")
    r.add_argument("path")
    r.set_defaults(func=cmd_roundtrip)

    e = sub.add_parser("enumerate", help="enumerate skew braces of a given order")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--up-to-iso", action="store_true")
    e.add_argument("--out")
    e.set_defaults(func=cmd_enumerate)

    k = sub.add_parser("catalog", help="list the catalog or verify all of it")
    k.add_argument("--run-all", action="store_true")
    k.add_argument("--inject-mutant", help=argparse.SUPPRESS)
    k.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.func(args)
    except HbxError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
