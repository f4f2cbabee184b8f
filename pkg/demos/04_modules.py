# Modules on both sides of the correspondence.

from hbx import verify_module_equivalence
from hbx.catalog import catalog
from hbx.errors import NotSymmetric
from hbx.modules import (check_cocycle_module, regular_cocycle_module, swap_cocycle_modules, tensor_cocycle_modules,
                         trivial_cocycle_module)

cat = catalog()
cd = cat.cocycles["E(lin skew 6.5/Q)^sigma"]
mods = [regular_cocycle_module(cd), trivial_cocycle_module(cd)]
rep = verify_module_equivalence(cd, mods)
print(rep.passed, len(rep.laws), "laws")

# Tensor products exist when the braiding is symmetric and both Hopf
# algebras are cocommutative; the swap is then a module isomorphism.
r = mods[0]
print(check_cocycle_module(tensor_cocycle_modules(r, r)).passed, swap_cocycle_modules(r, r).passed)

# With a genuinely braided backend the construction refuses.
line = regular_cocycle_module(cat.cocycles["H(braided line 3/F7)"])
try:
    tensor_cocycle_modules(line, line)
except NotSymmetric as e:
    print("refused:", e)
