"""Exact Lie algebra toolkit for Iu_n, gl_{n+}^eps and their cyclic symmetry."""

from .scalars import EPS, EpsPoly, rat_canonical, poly_mul, poly_specialize
from .core import (
    A,
    B,
    X,
    Named,
    Label,
    Element,
    elem,
    LieAlgebra,
    Report,
    Subspace,
    AlgebraError,
    bracket,
    jacobi_defect,
    verify_jacobi,
    subspace_reduce,
    bracket_span,
    derived_series,
    layer_series,
    center,
    is_solvable,
    change_of_basis,
    specialize,
    truncate,
)
from .constructions import (
    build_un,
    build_ln_eps,
    build_gln,
    build_Iu_direct,
    build_glpluseps_direct,
    coadjoint_semidirect,
    standard_pairing,
    manin_double,
    sl_restrict,
    diamond,
)
from .morphisms import (
    LinearMap,
    Permutation,
    map_apply,
    compose,
    power,
    order_of,
    is_automorphism,
    is_antiautomorphism,
    psi,
    phi,
    perm_map,
    enumerate_symmetries,
    exp_ad,
)
from .analysis import length, layer, verify_layer_table, verify_metric_layers

__version__ = "0.1.0"
