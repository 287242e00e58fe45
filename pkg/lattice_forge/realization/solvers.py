"""Solver entry points over parsed crystal graph files, selected by name from the config."""
import logging
from typing import Optional

from lattice_forge.graphs.multigraph import MultiGraph, build_graph
from lattice_forge.graphs.spanning_tree import SpanningTreeDecomposition, spanning_tree
from lattice_forge.homology.chains import ChainVector
from lattice_forge.homology.cycle_basis import CycleBasis, basis_from_chains, cycle_basis
from lattice_forge.homology.labels import Labels, label_of_chain, max_abelian_labels, vanishing_labels
from lattice_forge.realization.harmonic_solver import realize_harmonic_direct
from lattice_forge.realization.homology_solver import realize_max_abelian, realize_periodic
from lattice_forge.utils.datatypes import CrystalGraphFile, CrystalRealization
from lattice_forge.utils.errors import BasisError

logger = logging.getLogger(__name__)


def crystal_graph(cg: CrystalGraphFile) -> MultiGraph:
    return build_graph(len(cg.vertex_names), cg.edges)


def crystal_labels(cg: CrystalGraphFile, g: MultiGraph, tree: SpanningTreeDecomposition) -> Optional[Labels]:
    """Edge labels of the file, or those implied by its vanish cycles; None for the maximal covering."""
    vanish = [ChainVector(chain) for chain in cg.vanish]
    if cg.labels is not None:
        for k, chain in enumerate(vanish, start=1):
            if any(label_of_chain(chain, cg.labels)):
                raise BasisError(f"vanish cycle {k} has a nonzero label")
        return cg.labels
    if vanish:
        return vanishing_labels(g, vanish, tree)
    return None


def crystal_basis(
    cg: CrystalGraphFile, g: MultiGraph, tree: SpanningTreeDecomposition, period_count: int
) -> Optional[CycleBasis]:
    if not cg.basis:
        return None
    chains = [ChainVector(chain) for chain in cg.basis]
    return basis_from_chains(g, chains, period_count=period_count, tree=tree)


def solve_homology(cg: CrystalGraphFile) -> CrystalRealization:
    g = crystal_graph(cg)
    tree = spanning_tree(g)
    labels = crystal_labels(cg, g, tree)
    if labels is None:
        return realize_max_abelian(g, crystal_basis(cg, g, tree, g.betti_number), tree)
    return realize_periodic(g, labels, crystal_basis(cg, g, tree, len(labels[0])), tree)


def covering_labels(cg: CrystalGraphFile, g: MultiGraph, tree: SpanningTreeDecomposition) -> Labels:
    """Labels of the file's covering, with the maximal abelian labels standing in for unlabeled files."""
    labels = crystal_labels(cg, g, tree)
    if labels is None:
        basis = crystal_basis(cg, g, tree, g.betti_number) or cycle_basis(g, tree)
        labels = max_abelian_labels(g, basis, tree)
    return labels


def solve_direct(cg: CrystalGraphFile) -> CrystalRealization:
    g = crystal_graph(cg)
    tree = spanning_tree(g)
    labels = covering_labels(cg, g, tree)
    logger.info("Direct solver on %s", cg.name or "unnamed crystal")
    return realize_harmonic_direct(g, labels, tree)
