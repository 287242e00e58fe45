from lattice_forge.homology.chains import ChainVector, boundary, chain_inner_product, is_cycle
from lattice_forge.homology.cycle_basis import (
    CycleBasis,
    basis_from_chains,
    cotree_coordinates,
    cycle_basis,
    fundamental_cycle,
    gram_matrix,
)
from lattice_forge.homology.labels import (
    Labels,
    check_labeled_basis,
    label_map_matrix,
    label_of_chain,
    label_split_basis,
    max_abelian_labels,
    validate_labels,
    vanishing_labels,
)

__all__ = [
    "ChainVector",
    "CycleBasis",
    "Labels",
    "basis_from_chains",
    "boundary",
    "chain_inner_product",
    "check_labeled_basis",
    "cotree_coordinates",
    "cycle_basis",
    "fundamental_cycle",
    "gram_matrix",
    "is_cycle",
    "label_map_matrix",
    "label_of_chain",
    "label_split_basis",
    "max_abelian_labels",
    "validate_labels",
    "vanishing_labels",
]
