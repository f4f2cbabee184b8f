# Hopf algebras as exact structure constants.
#
# Every map is an integer matrix with one common denominator (or a matrix
# of residues mod p), so each axiom is checked as an equality of tables.

from hbx import braided_line, check_hopf, group_algebra, is_cocommutative, super_exterior_line, symmetric3
from hbx.fields import PrimeField, Q
from hbx.hopf import is_commutative

# The group algebra of S3 over F5: group-like basis, antipode from inverses.
h = group_algebra(symmetric3(), PrimeField(5), name="k[S3]/F5")
rep = check_hopf(h)
print(rep)
print("commutative:", is_commutative(h), " cocommutative:", is_cocommutative(h))

# One odd generator x with x^2 = 0 and x primitive.  Under the sign
# braiding the bialgebra law holds; under the plain swap it does not,
# and the report pins the offending entry of delta(x . x).
print(check_hopf(super_exterior_line(Q)).passed)
swap = check_hopf(super_exterior_line(Q, braid="swap"))
print(swap.first("comult multiplicative"))

# k[x]/(x^3) with x of degree 1 and braiding q = 2 in F7.  The antipode is
# solved from the convolution identity rather than typed in.
line = braided_line(3, PrimeField(7))
print(check_hopf(line).passed, "antipode diagonal:", [line.antipode.entry(i, i) for i in range(3)])
print("cocommutative:", is_cocommutative(line))
