"""rootcensus: computational number theory toolkit.

Primitive-root censuses over prime-producing polynomial families, Euler-product
density constants with tail bounds, repeating-expansion and class-number
identities, elliptic-curve group censuses over prime fields, and smooth-number
counting — with a reproducible CLI front end.
"""

from .arith import Factorization, factorize, is_prime, jacobi, sieve_primes
from .census import CensusRecord, PolySpec, poly_census
from .densities import DensityResult, ProductSpec, euler_product, named_constant
from .elliptic import Curve, GroupStructure, curve_order, group_structure
from .expansions import ExpansionRecord, repeating_block
from .smooth import dickman_rho, psi_count, theta_count

__version__ = "0.1.0"

__all__ = [
    "Factorization",
    "factorize",
    "is_prime",
    "jacobi",
    "sieve_primes",
    "CensusRecord",
    "PolySpec",
    "poly_census",
    "DensityResult",
    "ProductSpec",
    "euler_product",
    "named_constant",
    "Curve",
    "GroupStructure",
    "curve_order",
    "group_structure",
    "ExpansionRecord",
    "repeating_block",
    "dickman_rho",
    "psi_count",
    "theta_count",
    "__version__",
]
