"""Exact checkers for Hopf braces, invertible 1-cocycles and their modules.

Everything is computed over Q or a prime field with integer arrays, so
every law is an equality of structure constants, never an approximation.
"""

from .brace import HopfBraceData, check_hopf_brace, gamma1, gamma_prime, trivial_brace
from .cocycle import (CocycleData, CocycleMorphism, check_cocycle, check_cocycle_morphism, functor_E, functor_H,
                      functor_Q, phi_prime, recover_phi, verify_ic_hbr_equivalence, verify_phi_prime_theorem)
from .constructions import (braided_line, cyclic, direct_product, group_algebra, linearize_skew_brace,
                            super_exterior_line, symmetric3)
from .core import BraidSpec, FinObject, Morphism, c, evaluate, identity, make_object, unit_object
from .errors import HbxError
from .fields import PrimeField, Q
from .hopf import HopfData, check_hopf, is_cocommutative
from .modules import (BraceModuleData, CocycleModuleData, check_brace_module, check_cocycle_module,
                      verify_module_equivalence)
from .report import CheckReport
from .skew import GroupTable, SkewBraceTable, check_skew_brace, enumerate_skew_braces

__all__ = [name for name in dir() if not name.startswith("_")]
