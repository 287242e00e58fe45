"""Benchmark both solvers over the bundled crystals and tabulate residuals.

    python eval.py [--automatic] [--csv results.csv]
"""
import argparse
import logging
import time

import numpy as np
import polars as pl
from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import track
from rich.table import Table

from lattice_forge.config import load_config
from lattice_forge.graphs import spanning_tree
from lattice_forge.io import load_cg
from lattice_forge.realization import congruent, energy, periodic_girth, verify_standard
from lattice_forge.realization.solvers import covering_labels, crystal_graph, solve_direct, solve_homology
from lattice_forge.utils.errors import LatticeForgeError
from lattice_forge.utils.seed import seed_from_env, set_seed
from lattice_forge.utils.settings import AUTOMATIC_CRYSTALS_DIR, CRYSTALS_DIR

load_dotenv()
logger = logging.getLogger(__name__)
console = Console()

SOLVERS = {"homology": solve_homology, "direct": solve_direct}
PERTURBATIONS = 20
PERTURBATION_SCALE = 0.2


def energy_gap(r, rng: np.random.Generator) -> float:
    """Smallest energy increase over random vertex displacements; negative means not minimal."""
    best = energy(r).normalized_energy
    gaps = []
    for _ in range(PERTURBATIONS):
        moved = r.with_positions(r.vertex_positions + rng.normal(scale=PERTURBATION_SCALE, size=r.vertex_positions.shape))
        gaps.append(energy(moved).normalized_energy - best)
    return min(gaps)


def evaluate_crystal(path, rng: np.random.Generator) -> list[dict]:
    cg = load_cg(path)
    g = crystal_graph(cg)
    try:
        girth = periodic_girth(g, covering_labels(cg, g, spanning_tree(g)))
    except LatticeForgeError as exc:
        logger.warning("No girth for %s: %s", cg.name, exc)
        girth = None

    rows, realizations = [], {}
    for method, solver in SOLVERS.items():
        start = time.perf_counter()
        try:
            r = solver(cg)
        except LatticeForgeError as exc:
            logger.warning("%s solver failed on %s: %s", method, cg.name, exc)
            continue
        elapsed = time.perf_counter() - start
        realizations[method] = r
        report = verify_standard(r)
        rows.append(
            {
                "crystal": cg.name,
                "method": method,
                "dimension": r.dimension,
                "vertices": g.vertex_count,
                "edges": g.edge_count,
                "girth": girth,
                "c": report.c,
                "normalized_energy": energy(r).normalized_energy,
                "balance": report.balance_residual,
                "eet": report.eet_residual,
                "energy_gap": energy_gap(r, rng),
                "seconds": elapsed,
            }
        )
    if len(realizations) == 2:
        agree = congruent(realizations["homology"], realizations["direct"])
        for row in rows:
            row["solvers_agree"] = agree
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--automatic", action="store_true", help="use the crystals without basis overrides")
    parser.add_argument("--csv", help="write the results table to this file")
    args = parser.parse_args()
    logging.basicConfig(level="WARNING", format="%(message)s", handlers=[RichHandler(show_path=False)])

    config = load_config()
    rng = set_seed(seed_from_env(default=config.seed))

    directory = AUTOMATIC_CRYSTALS_DIR if args.automatic else CRYSTALS_DIR
    paths = sorted(directory.glob("*.cg"))
    rows = []
    for path in track(paths, description="Realizing crystals..."):
        rows.extend(evaluate_crystal(path, rng))
    results = pl.DataFrame(rows)

    table = Table(title=f"Standard realizations ({directory.name})")
    for column in results.columns:
        table.add_column(column, justify="left" if column in ("crystal", "method") else "right")
    for row in results.iter_rows():
        table.add_row(*(f"{x:.3e}" if isinstance(x, float) else str(x) for x in row))
    console.print(table)

    worst = results.select(pl.max("eet"), pl.max("balance")).row(0)
    console.print(f"worst eeT residual {worst[0]:.3e}, worst balance residual {worst[1]:.3e}")
    below = results.filter(pl.col("energy_gap") < -1e-12)
    if below.height:
        logger.warning("Perturbations lowered the energy of %s", below["crystal"].to_list())
    if args.csv:
        results.write_csv(args.csv)
        console.print(f"Results written to {args.csv}")


if __name__ == "__main__":
    main()
