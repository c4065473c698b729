"""Exact computation on finite orthogonality spaces and Hermitian spaces."""

from .core import (
    OrthoSpace,
    Subset,
    extend_to_maximal,
    is_irreducible,
    is_irredundant,
    is_strongly_irredundant,
    maximal_orthogonal_sets,
    new_space,
    ortho_closure,
    ortho_complement,
    rank,
)
from .classify import ClassReport, classify, is_dacey, is_linear, is_normal_fast, is_normal_oracle, subspace
from .lattice import OrthoLattice, boolean_block, build_lattice, generated_subalgebra, is_boolean, is_orthomodular
from .morphisms import (
    SpaceMap,
    automorphisms,
    compose,
    enumerate_homs,
    identity_map,
    inclusion,
    induced_lattice_map,
    is_homomorphism,
    is_normal_hom,
)

__version__ = "0.1.0"
