from lattice_forge.realization.allotropes import carbon_allotrope, hypercubic
from lattice_forge.realization.girth import periodic_girth
from lattice_forge.realization.harmonic_solver import harmonic_coefficients, realize_harmonic_direct
from lattice_forge.realization.homology_solver import (
    cholesky_lattice,
    project_edges,
    realize_max_abelian,
    realize_periodic,
    reduce_period_gram,
)
from lattice_forge.realization.supercell import supercell
from lattice_forge.realization.verification import (
    congruent,
    energy,
    inner_product_multiset,
    realization_gram,
    verify_standard,
)

__all__ = [
    "carbon_allotrope",
    "cholesky_lattice",
    "congruent",
    "energy",
    "harmonic_coefficients",
    "hypercubic",
    "inner_product_multiset",
    "periodic_girth",
    "project_edges",
    "realization_gram",
    "realize_harmonic_direct",
    "realize_max_abelian",
    "realize_periodic",
    "reduce_period_gram",
    "supercell",
    "verify_standard",
]
