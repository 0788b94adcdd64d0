"""Exact computations with finite lattices, pole posets and their join-morphism algebras."""
from .decompose import (
    CheckResult,
    DecompositionReport,
    decomposition_report,
    f_elements,
    orbit_reps,
    pol_T,
    product_law_failures,
    verify_suite,
)
from .errors import (
    ConsistencyError,
    ContractError,
    DimensionError,
    DomainError,
    PoleLatticeError,
    ResourceGuardError,
)
from .functors import FreeElt, LatticeMap, gamma, pole_span_check, rank_SQ, rho_iso, z_basis
from .klin import LinMorph, e_T, epsilon_Q, f_general, j_pi, lin_compose, rho_sum
from .lattices import (
    Lattice,
    boolean_lattice,
    chain_lattice,
    diamond_m3,
    downset_lattice,
    enumerate_lattices,
    enumerate_pole_signatures,
    lattice_from_covers,
    lattice_from_poset,
    mobius,
    pentagon_n5,
    pole_lattice,
    pole_signature,
)
from .morphisms import (
    JoinMorphism,
    compose,
    enumerate_hom,
    enumerate_inj,
    enumerate_sur,
    omega,
    op_morphism,
)
from .posets import Poset, enumerate_posets, is_pole_by_permutation, pole_decomposition
from .relalg import RelLinComb, delta, delta_square_identity, nonzero_condition
from .relations import GroundSet, Permutation, Relation

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "ConsistencyError",
    "ContractError",
    "DecompositionReport",
    "DimensionError",
    "DomainError",
    "FreeElt",
    "GroundSet",
    "JoinMorphism",
    "Lattice",
    "LatticeMap",
    "LinMorph",
    "Permutation",
    "PoleLatticeError",
    "Poset",
    "RelLinComb",
    "Relation",
    "ResourceGuardError",
    "boolean_lattice",
    "chain_lattice",
    "compose",
    "decomposition_report",
    "delta",
    "delta_square_identity",
    "diamond_m3",
    "downset_lattice",
    "e_T",
    "enumerate_hom",
    "enumerate_inj",
    "enumerate_lattices",
    "enumerate_pole_signatures",
    "enumerate_posets",
    "enumerate_sur",
    "epsilon_Q",
    "f_elements",
    "f_general",
    "gamma",
    "is_pole_by_permutation",
    "j_pi",
    "lattice_from_covers",
    "lattice_from_poset",
    "lin_compose",
    "mobius",
    "nonzero_condition",
    "omega",
    "op_morphism",
    "orbit_reps",
    "pentagon_n5",
    "pol_T",
    "pole_decomposition",
    "pole_lattice",
    "pole_signature",
    "pole_span_check",
    "product_law_failures",
    "rank_SQ",
    "rho_iso",
    "rho_sum",
    "verify_suite",
    "z_basis",
]
