# Invertible 1-cocycles and braces describe the same data.
#
# E turns a brace into the cocycle id: H2 -> H1 acting through Gamma; Q goes
# back by transporting the second product along pi.

from hbx import check_cocycle, functor_E, functor_H, functor_Q, phi_prime, recover_phi, verify_ic_hbr_equivalence
from hbx.catalog import catalog
from hbx.hopf import adjoint_action

cat = catalog()
hb = cat.braces["lin skew 6.5/Q"]
cd = functor_E(hb)
print("E(hb) is a cocycle:", check_cocycle(cd).passed)
print("QE = id:", functor_Q(cd).parts() == hb.parts())

# A cocycle whose pi is a genuine relabeling, not the identity.
sig = cat.cocycles["E(lin skew 6.5/Q)^sigma"]
print(verify_ic_hbr_equivalence(cocycles=[sig]).passed)

# The companion action of the trivial-action cocycle is the adjoint action,
# and the original action can be rebuilt from the companion exactly.
for name in ("k[S3]/Q", "braided line 3/F7"):
    h = cat.hopf[name]
    print(name, phi_prime(functor_H(h)) == adjoint_action(h))
print(recover_phi(sig.A, sig.H, sig.pi, phi_prime(sig)) == sig.phi)
