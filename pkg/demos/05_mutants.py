# Each shipped mutant changes a single matrix entry of a catalog instance.
# The checker must notice, and say which law broke and where.

from hbx import mutants

for m in mutants.registry()[:12]:
    rep = mutants.run(m)
    v = rep.first(m.target)
    print(f"{m.id:38s} {m.base:24s} -> {', '.join(rep.failed_laws)}")
    print(f"{'':38s} witness {v.witness} lhs={v.lhs} rhs={v.rhs}")
