"""Finite groups and skew braces given by multiplication tables.

Elements are the integers ``0 .. n-1``.  Enumeration always fixes the
identity at 0.

Skew braces are enumerated through their lambda-maps: for a fixed additive
group ``(T, +)`` every compatible second operation has the form
``a o b = a + lam_a(b)`` where ``lam : (T, o) -> Aut(T, +)`` is a group
homomorphism with ``lam_0 = id``.  Searching over lambda-maps instead of
over second tables keeps order 8 tractable.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product

from .errors import InvalidGroup, OrderTooLarge
from .report import Checker, CheckReport

MAX_ORDER = 8


@dataclass(frozen=True)
class GroupTable:
    op: tuple[tuple[int, ...], ...]
    e: int = 0

    @classmethod
    def from_rows(cls, rows, e: int = 0) -> "GroupTable":
        return cls(tuple(tuple(int(v) for v in r) for r in rows), e)

    @property
    def n(self) -> int:
        return len(self.op)

    def mul(self, a: int, b: int) -> int:
        return self.op[a][b]

    def inv(self, a: int) -> int:
        return self.op[a].index(self.e)

    def is_abelian(self) -> bool:
        return all(self.op[a][b] == self.op[b][a] for a in range(self.n) for b in range(self.n))

    def flat(self) -> tuple[int, ...]:
        return tuple(v for r in self.op for v in r)

    def relabel(self, perm) -> "GroupTable":
        """Transport the structure along the bijection ``a -> perm[a]``."""
        n = self.n
        out = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                out[perm[a]][perm[b]] = perm[self.op[a][b]]
        return GroupTable.from_rows(out, perm[self.e])


def group_laws(chk: Checker, g: GroupTable, prefix: str = "") -> bool:
    n, op, e = g.n, g.op, g.e
    shape_ok = all(len(r) == n for r in op) and 0 <= e < n
    if not chk.require(prefix + "closure", shape_ok and all(0 <= v < n for r in op for v in r)):
        return False
    bad_id = next(((a,) for a in range(n) if op[e][a] != a or op[a][e] != a), None)
    chk.require(prefix + "identity", bad_id is None, bad_id or ())
    bad_inv = next(((a,) for a in range(n) if e not in op[a] or e not in [op[b][a] for b in range(n)]), None)
    chk.require(prefix + "inverses", bad_inv is None, bad_inv or ())
    bad_assoc = next(((a, b, x) for a in range(n) for b in range(n) for x in range(n)
                      if op[op[a][b]][x] != op[a][op[b][x]]), None)
    chk.require(prefix + "associativity", bad_assoc is None, bad_assoc or ())
    return chk.report.passed


def check_group(g: GroupTable) -> CheckReport:
    chk = Checker("group")
    group_laws(chk, g)
    return chk.done()


def require_group(g: GroupTable) -> None:
    rep = check_group(g)
    if not rep.passed:
        raise InvalidGroup(f"not a group: {rep.failed_laws}")


def cyclic(n: int) -> GroupTable:
    return GroupTable.from_rows([[(a + b) % n for b in range(n)] for a in range(n)])


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    """Elements ``(a, b)`` encoded as ``a * |h| + b``."""
    m = h.n
    rows = [[g.op[a // m][b // m] * m + h.op[a % m][b % m] for b in range(g.n * m)] for a in range(g.n * m)]
    return GroupTable.from_rows(rows, g.e * m + h.e)


def symmetric3() -> GroupTable:
    """S3 with elements ordered as the lexicographic permutations of (0, 1, 2)."""
    perms = sorted(permutations(range(3)))
    rows = [[perms.index(tuple(p[q[i]] for i in range(3))) for q in perms] for p in perms]
    return GroupTable.from_rows(rows)


@dataclass(frozen=True)
class SkewBraceTable:
    diamond: GroupTable
    circ: GroupTable

    @property
    def n(self) -> int:
        return self.diamond.n

    def gamma(self, a: int, b: int) -> int:
        """``a^<> <> (a o b)``, the lambda-map of the brace."""
        d = self.diamond
        return d.mul(d.inv(a), self.circ.mul(a, b))

    def key(self) -> tuple:
        return self.diamond.flat() + self.circ.flat()

    def relabel(self, perm) -> "SkewBraceTable":
        return SkewBraceTable(self.diamond.relabel(perm), self.circ.relabel(perm))

    def is_trivial(self) -> bool:
        return self.diamond == self.circ


def check_skew_brace(t: SkewBraceTable) -> CheckReport:
    """Both group axioms and ``a o (b <> c) = (a o b) <> a^<> <> (a o c)``."""
    chk = Checker("skew brace")
    ok = group_laws(chk, t.diamond, "diamond ")
    ok = group_laws(chk, t.circ, "circ ") and ok
    chk.require("common identity", t.diamond.e == t.circ.e)
    if not ok:
        return chk.done()
    d, o, n = t.diamond.op, t.circ.op, t.n
    inv = [t.diamond.inv(a) for a in range(n)]
    bad = [(a, b, x) for a in range(n) for b in range(n) for x in range(n)
           if o[a][d[b][x]] != d[d[o[a][b]][inv[a]]][o[a][x]]]
    chk.require("compatibility", not bad, bad[0] if bad else ())
    return chk.done()


# enumeration


def enumerate_groups(n: int) -> list[GroupTable]:
    """All group tables on ``0..n-1`` with identity 0, in lexicographic order.

    Backtracking over cells; every assignment is propagated through the
    associativity constraints it participates in, with an undo trail.
    """
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} > {MAX_ORDER}")
    if n < 1:
        return []
    t = [[-1] * n for _ in range(n)]
    row = [[False] * n for _ in range(n)]
    col = [[False] * n for _ in range(n)]
    trail: list[tuple[int, int]] = []
    out: list[GroupTable] = []

    def assign(a: int, b: int, v: int, queue: list) -> bool:
        cur = t[a][b]
        if cur >= 0:
            return cur == v
        if row[a][v] or col[b][v]:
            return False
        t[a][b] = v
        row[a][v] = col[b][v] = True
        trail.append((a, b))
        queue.append((a, b))
        return True

    def propagate(queue: list) -> bool:
        while queue:
            a, b = queue.pop()
            v = t[a][b]
            for x in range(n):
                # (a b) x = a (b x)
                bx = t[b][x]
                if bx >= 0:
                    lhs, rhs = t[v][x], t[a][bx]
                    if lhs >= 0:
                        if not assign(a, bx, lhs, queue):
                            return False
                    elif rhs >= 0 and not assign(v, x, rhs, queue):
                        return False
                # (x a) b = x (a b)
                xa = t[x][a]
                if xa >= 0:
                    lhs, rhs = t[xa][b], t[x][v]
                    if lhs >= 0:
                        if not assign(x, v, lhs, queue):
                            return False
                    elif rhs >= 0 and not assign(xa, b, rhs, queue):
                        return False
                for y in range(n):
                    # x (y b) = (x y) b when x y = a
                    if t[x][y] == a:
                        yb = t[y][b]
                        if yb >= 0 and not assign(x, yb, v, queue):
                            return False
                    # (a y) x = a (y x) when y x = b
                    if t[y][x] == b:
                        ay = t[a][y]
                        if ay >= 0 and not assign(ay, x, v, queue):
                            return False
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            a, b = trail.pop()
            v = t[a][b]
            row[a][v] = col[b][v] = False
            t[a][b] = -1

    queue: list = []
    for a in range(n):
        assign(0, a, a, queue)
        assign(a, 0, a, queue)
    propagate(queue)

    def rec() -> None:
        cell = next(((a, b) for a in range(1, n) for b in range(1, n) if t[a][b] < 0), None)
        if cell is None:
            out.append(GroupTable.from_rows(t))
            return
        a, b = cell
        for v in range(n):
            if row[a][v] or col[b][v]:
                continue
            mark = len(trail)
            q: list = []
            if assign(a, b, v, q) and propagate(q):
                rec()
            undo(mark)

    rec()
    return sorted(out, key=GroupTable.flat)


def _generators(g: GroupTable) -> list[int]:
    gens, span = [], {g.e}
    for a in range(g.n):
        if a in span:
            continue
        gens.append(a)
        span = _closure(g, gens)
    return gens


def _closure(g: GroupTable, gens) -> set[int]:
    span = {g.e}
    frontier = [g.e]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = g.op[x][s]
            if y not in span:
                span.add(y)
                frontier.append(y)
    return span


def automorphisms(g: GroupTable) -> list[tuple[int, ...]]:
    """All automorphisms as permutation tuples, sorted."""
    gens = _generators(g)
    n = g.n
    # each element as a word in the generators
    words = {g.e: ()}
    frontier = [g.e]
    while frontier:
        nxt = []
        for x in frontier:
            for i, s in enumerate(gens):
                y = g.op[x][s]
                if y not in words:
                    words[y] = words[x] + (i,)
                    nxt.append(y)
        frontier = nxt
    out = []
    for images in product(range(n), repeat=len(gens)):
        phi = [0] * n
        for x, w in words.items():
            v = g.e
            for i in w:
                v = g.op[v][images[i]]
            phi[x] = v
        if len(set(phi)) != n:
            continue
        if all(phi[g.op[a][b]] == g.op[phi[a]][phi[b]] for a in range(n) for b in range(n)):
            out.append(tuple(phi))
    return sorted(out)


def compatible_circs(diamond: GroupTable) -> list[GroupTable]:
    """Every second group structure making ``diamond`` a skew brace."""
    n = diamond.n
    d = diamond.op
    auts = automorphisms(diamond)
    ident = tuple(range(n))
    idx = {a: i for i, a in enumerate(auts)}
    comp = [[idx[tuple(p[q[x]] for x in range(n))] for q in auts] for p in auts]
    lam = [-1] * n
    lam[0] = idx[ident]
    out = []

    def circ(a, b):
        return d[a][auts[lam[a]][b]]

    def propagate(assigned: list[int]) -> bool:
        changed = True
        while changed:
            changed = False
            known = [a for a in range(n) if lam[a] >= 0]
            for a in known:
                for b in known:
                    ab = circ(a, b)
                    want = comp[lam[a]][lam[b]]
                    if lam[ab] < 0:
                        lam[ab] = want
                        assigned.append(ab)
                        changed = True
                    elif lam[ab] != want:
                        return False
        return True

    def rec() -> None:
        free = next((a for a in range(n) if lam[a] < 0), None)
        if free is None:
            out.append(GroupTable.from_rows([[circ(a, b) for b in range(n)] for a in range(n)]))
            return
        for i in range(len(auts)):
            lam[free] = i
            assigned = [free]
            if propagate(assigned):
                rec()
            for a in assigned:
                lam[a] = -1

    rec()
    return sorted(out, key=GroupTable.flat)


def _braces_over(diamond: GroupTable) -> list[SkewBraceTable]:
    return [SkewBraceTable(diamond, o) for o in compatible_circs(diamond)]


def _iso_braces_over(diamond: GroupTable) -> list[SkewBraceTable]:
    auts = automorphisms(diamond)
    reps = {}
    for o in compatible_circs(diamond):
        key = min(o.relabel(p).flat() for p in auts)
        reps.setdefault(key, o)
    return [SkewBraceTable(diamond, GroupTable.from_rows([k[i * diamond.n:(i + 1) * diamond.n]
                                                          for i in range(diamond.n)]))
            for k in sorted(reps)]


def group_class_representatives(n: int) -> list[GroupTable]:
    """Lexicographically first table of each isomorphism class."""
    seen: set[tuple] = set()
    reps = []
    perms = [(0,) + p for p in permutations(range(1, n))]
    for g in enumerate_groups(n):
        if g.flat() in seen:
            continue
        reps.append(g)
        for p in perms:
            seen.add(g.relabel(p).flat())
    return reps


@dataclass
class Census:
    order: int
    up_to_iso: bool
    braces: list[SkewBraceTable]

    @property
    def count(self) -> int:
        return len(self.braces)


def threads() -> int:
    try:
        return max(1, int(os.environ.get("HBX_THREADS", "1")))
    except ValueError:
        return 1


def enumerate_skew_braces(n: int, up_to_iso: bool = False, workers: int | None = None) -> Census:
    """All skew braces of order ``n`` (identity 0), sorted lexicographically.

    With ``up_to_iso`` one representative per isomorphism class is kept.
    ``workers`` (default: ``HBX_THREADS``) fans out over additive groups;
    the result does not depend on it.
    """
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} > {MAX_ORDER}")
    if n < 1:
        raise OrderTooLarge("order must be positive")
    diamonds = group_class_representatives(n) if up_to_iso else enumerate_groups(n)
    job = _iso_braces_over if up_to_iso else _braces_over
    workers = threads() if workers is None else workers
    if workers > 1 and len(diamonds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(job, diamonds))
    else:
        parts = [job(d) for d in diamonds]
    braces = sorted((b for part in parts for b in part), key=SkewBraceTable.key)
    return Census(n, up_to_iso, braces)
