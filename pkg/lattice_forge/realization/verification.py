import logging

import numpy as np

from lattice_forge.utils.datatypes import CrystalRealization, EnergyReport, StandardnessReport

logger = logging.getLogger(__name__)


def balance_vectors(r: CrystalRealization) -> np.ndarray:
    """Sum of the outgoing edge vectors at each vertex, both orientations counted.

    A loop leaves its vertex once in each direction, so it cancels.
    """
    edges = np.array(r.graph.edges, dtype=int).reshape(-1, 2)
    sums = np.zeros((r.graph.vertex_count, r.dimension))
    np.add.at(sums, edges[:, 0], r.edge_vectors)
    np.add.at(sums, edges[:, 1], -r.edge_vectors)
    return sums


def verify_standard(r: CrystalRealization) -> StandardnessReport:
    """Residuals of the balance condition and of sum e e^T = c I.

    Args:
        r (CrystalRealization): realization to check; any scale.

    Returns:
        StandardnessReport: the three residuals and c = sum |e|^2 / d over one orientation per edge.
    """
    balance = balance_vectors(r)
    balance_residual = float(np.max(np.linalg.norm(balance, axis=1))) if len(balance) else 0.0
    # Identically zero up to round-off: each oriented edge enters two balance vectors with opposite signs.
    edge_sum_residual = float(np.linalg.norm(balance.sum(axis=0)))

    c = r.standardness_constant
    moment = r.edge_vectors.T @ r.edge_vectors
    eet_residual = float(np.linalg.norm(moment - c * np.eye(r.dimension)))
    report = StandardnessReport(
        balance_residual=balance_residual,
        edge_sum_residual=edge_sum_residual,
        eet_residual=eet_residual,
        c=c,
    )
    logger.info(
        "Residuals: balance %s, edge sum %s, eeT %s (c=%s)",
        balance_residual,
        edge_sum_residual,
        eet_residual,
        c,
    )
    return report


def energy(r: CrystalRealization) -> EnergyReport:
    """Raw energy sum |e|^2 and its scale-free form Vol^(-2/d) sum |e|^2."""
    raw = float(np.sum(r.edge_vectors**2))
    volume = r.lattice.volume
    return EnergyReport(
        raw_energy=raw,
        normalized_energy=raw * volume ** (-2.0 / r.dimension),
        volume=volume,
    )


def realization_gram(r: CrystalRealization, normalize: bool = True) -> np.ndarray:
    """|E| x |E| matrix of <e_i, e_j>, scaled to unit cell volume when `normalize`."""
    gram = r.edge_vectors @ r.edge_vectors.T
    if normalize:
        gram = gram * r.lattice.volume ** (-2.0 / r.dimension)
    return gram


def inner_product_multiset(r: CrystalRealization, normalize: bool = True) -> np.ndarray:
    return np.sort(realization_gram(r, normalize).ravel())


def congruent(first: CrystalRealization, second: CrystalRealization, tol: float = 1e-9) -> bool:
    """Same edge set realized up to an orthogonal map and a uniform scale."""
    if first.graph.edge_count != second.graph.edge_count or first.dimension != second.dimension:
        return False
    difference = realization_gram(first) - realization_gram(second)
    return bool(np.max(np.abs(difference)) < tol)
