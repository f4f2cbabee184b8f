# From skew braces to Hopf braces.
#
# A skew brace is a set with two group laws tied together by one
# compatibility identity.  Linearizing gives a Hopf brace on the
# group-like coalgebra with the same basis.

from hbx import check_hopf_brace, check_skew_brace, enumerate_skew_braces, gamma1, linearize_skew_brace
from hbx.fields import Q

for n in range(1, 7):
    labeled = enumerate_skew_braces(n)
    classes = enumerate_skew_braces(n, up_to_iso=True)
    print(f"order {n}: {labeled.count:4d} labeled, {classes.count} up to isomorphism")

t = enumerate_skew_braces(6, up_to_iso=True).braces[5]
print(check_skew_brace(t).passed)
hb = linearize_skew_brace(t, Q, name="order 6 brace")
print(check_hopf_brace(hb).passed)

# Gamma sends e_a (x) e_b to the basis vector of a^-1 <> (a o b), the
# lambda map of the brace.  Compare on a few pairs.
g = gamma1(hb)
for a, b in [(1, 2), (3, 4), (5, 5)]:
    column = [g.entry(k, a * 6 + b).value for k in range(6)]
    print(a, b, column.index(1), t.gamma(a, b))
