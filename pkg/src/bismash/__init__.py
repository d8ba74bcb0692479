"""Bismash products of exactly factorized finite groups.

Construct the Hopf algebra k^L # kF from a factorized group (G, L, F),
compute its simple-module dimensions two independent ways (orbit/stabilizer
formula and a brute-force Wedderburn decomposition), and run the structural
checks for the PGL2(q) and Frobenius families.
"""

from ._kernels import BACKEND as kernel_backend
from .bismash import (
    BismashAlgebra,
    FactorizedGroup,
    HopfMaps,
    MutualActions,
    build_algebra,
    build_hopf_maps,
    cocommutativity_check,
    factorize,
    frobenius_bismash_report,
    group_algebra,
    group_degrees,
    kmm_dimensions,
    load_factorized_spec,
    mutual_actions,
    verify_action_axioms,
    verify_hopf_axioms,
)
from .gf import FieldCtx, FieldElement, QuadraticPoly, field_create, find_primitive_quadratic
from .lingrp import Pgl2Package, build_gln2, build_pgl2, singer_normalizer_order
from .permgrp import (
    Perm,
    PermGroup,
    SubgroupSeries,
    abelian_invariants_of_quotient,
    derived_subgroup,
    exponent,
    lower_central_series,
    orbit,
    parse_cycles,
    stabilizer_by_filter,
)
from .screen import mersenne_condition, quotient_degree_solutions, screen_pattern
from .wedderburn import (
    DegreeMultiset,
    DecompositionResult,
    StructureConstantAlgebra,
    decompose,
    select_prime,
)

__version__ = "0.1.0"
