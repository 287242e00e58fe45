"""Command-line interface: `python -m lattice_forge SUBCOMMAND ...`.

Exit codes: 0 on success, 1 on invalid input, 2 on numerical failure.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
from hydra.errors import HydraException
from omegaconf import DictConfig, OmegaConf
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from lattice_forge.config import load_config
from lattice_forge.config.factories import get_exporter, get_solver
from lattice_forge.electronic.bands import dirac_scan, graphene_band
from lattice_forge.electronic.huckel import huckel
from lattice_forge.electronic.nanotube import ChiralIndex, build_swnt, classify_metallic, tube_frame
from lattice_forge.graphs.multigraph import adjacency_spectrum
from lattice_forge.graphs.spanning_tree import spanning_tree
from lattice_forge.io.cg_format import load_cg
from lattice_forge.io.documents import (
    load_geometry,
    load_realization,
    realization_from_document,
    surface_from_geometry,
)
from lattice_forge.io.exporters import export
from lattice_forge.realization.girth import periodic_girth
from lattice_forge.realization.solvers import covering_labels, crystal_graph
from lattice_forge.realization.verification import energy, verify_standard
from lattice_forge.surface.curvature import (
    area_first_variation_check,
    curvature_map,
    gauss_identity_residual,
    minimal_residual,
    sphere_radius,
    vertex_normals,
)
from lattice_forge.surface.faces import euler_stats, trace_faces
from lattice_forge.surface.polyhedra import TEMPLATES
from lattice_forge.surface.relaxation import relax_to_minimal
from lattice_forge.utils.errors import InvalidInputError, NumericalError

logger = logging.getLogger(__name__)

AREA_VARIATION_STEPS = (1e-2, 1e-3, 1e-4)

out = Console()
err = Console(stderr=True)


def _emit(data: bytes, output: Optional[str]) -> None:
    if output:
        Path(output).write_bytes(data)
        err.print(f"Wrote {len(data)} bytes to {output}")
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _residual_table(title: str, rows: Sequence[tuple[str, object]]) -> Table:
    table = Table(title=title)
    table.add_column("quantity")
    table.add_column("value", justify="right")
    for name, value in rows:
        table.add_row(name, f"{value:.6e}" if isinstance(value, float) else str(value))
    return table


def cmd_realize(args: argparse.Namespace, config: DictConfig) -> int:
    crystal = load_cg(args.file)
    realization = get_solver(config)(crystal)
    report = verify_standard(realization)
    counts = OmegaConf.to_container(config.supercell) if config.supercell is not None else None
    data = get_exporter(config)(realization, counts=counts, name=crystal.name)
    _emit(data, args.output)
    err.print(
        _residual_table(
            f"{crystal.name or args.file} ({realization.method})",
            [
                ("balance residual", report.balance_residual),
                ("edge-sum residual", report.edge_sum_residual),
                ("eeT residual", report.eet_residual),
                ("c", report.c),
                ("normalized energy", energy(realization).normalized_energy),
            ],
        )
    )
    if not report.is_standard(config.tolerances.residual):
        logger.warning("Realization is not standard within %s", config.tolerances.residual)
    return 0


def cmd_verify(args: argparse.Namespace, config: DictConfig) -> int:
    realization = realization_from_document(load_realization(args.file))
    report = verify_standard(realization)
    standard = report.is_standard(config.tolerances.residual)
    out.print(
        _residual_table(
            str(args.file),
            [
                ("balance residual", report.balance_residual),
                ("edge-sum residual", report.edge_sum_residual),
                ("eeT residual", report.eet_residual),
                ("c", report.c),
                ("standard", standard),
            ],
        )
    )
    return 0 if standard else 2


def cmd_curvature(args: argparse.Namespace, config: DictConfig) -> int:
    surface = surface_from_geometry(load_geometry(args.file))
    report = curvature_map(surface)
    radius = sphere_radius(surface)
    rows = [
        ("vertices", surface.vertex_count),
        ("total area", report.total_area),
        ("K min", float(np.min(report.gauss_curvature))),
        ("K max", float(np.max(report.gauss_curvature))),
        ("H min", float(np.min(report.mean_curvature))),
        ("H max", float(np.max(report.mean_curvature))),
        ("sphere radius", radius if radius is not None else "-"),
    ]
    if args.check_gauss:
        normals = vertex_normals(surface)
        worst = max(gauss_identity_residual(surface, v, normals) for v in range(surface.vertex_count))
        rows.append(("Gauss identity residual", worst))
    out.print(_residual_table(str(args.file), rows))

    if args.check_area_variation:
        variation = area_first_variation_check(surface, AREA_VARIATION_STEPS)
        table = Table(title=f"area first variation, predicted {variation.predicted:.10e}")
        for column in ("t", "dA/dt", "discrepancy"):
            table.add_column(column, justify="right")
        for t, derivative, gap in zip(variation.t_values, variation.derivatives, variation.discrepancies):
            table.add_row(f"{t:.0e}", f"{derivative:.10e}", f"{gap:.3e}")
        out.print(table)
        if variation.decay_rate is not None:
            out.print(f"discrepancy decay rate: {variation.decay_rate:.3f}")

    if args.per_vertex:
        table = Table(title="per vertex")
        for column in ("vertex", "K", "H", "area"):
            table.add_column(column, justify="right")
        for v in range(surface.vertex_count):
            table.add_row(
                str(v),
                f"{report.gauss_curvature[v]:.10e}",
                f"{report.mean_curvature[v]:.10e}",
                f"{report.local_area[v]:.10e}",
            )
        out.print(table)
    return 0


def cmd_euler(args: argparse.Namespace, config: DictConfig) -> int:
    surface = surface_from_geometry(load_geometry(args.file))
    stats = euler_stats(trace_faces(surface), surface.vertex_count, surface.edge_count)
    table = Table(title=str(args.file))
    table.add_column("face size", justify="right")
    table.add_column("count", justify="right")
    for size, count in stats.face_sizes.items():
        table.add_row(str(size), str(count))
    out.print(table)
    out.print(
        f"V = {stats.vertex_count}, E = {stats.edge_count}, F = {stats.face_count}, "
        f"chi = {stats.chi_from_counts} (from face sizes: {stats.chi_from_formula})"
    )
    return 0


def cmd_minimal(args: argparse.Namespace, config: DictConfig) -> int:
    surface = surface_from_geometry(load_geometry(args.file))
    residual = minimal_residual(surface)
    out.print(
        _residual_table(
            str(args.file),
            [
                ("max |H|", residual.max_mean_curvature),
                ("max linear-system residual", residual.max_linear_system_residual),
            ],
        )
    )
    if not args.relax:
        return 0
    result = relax_to_minimal(
        surface,
        fixed=args.fixed,
        max_iters=config.relax.max_iters,
        tol=config.relax.tol,
        step=config.relax.step,
    )
    out.print(
        f"relaxation: {result.iterations} iterations, "
        f"max |H| {result.history[0]:.6e} -> {result.history[-1]:.6e}"
    )
    _emit(export(result.surface, "json", name=Path(args.file).stem), args.output)
    return 0 if result.converged else 2


def cmd_nanotube(args: argparse.Namespace, config: DictConfig) -> int:
    ci = ChiralIndex(args.c1, args.c2, scale=config.nanotube.scale)
    if args.classify:
        out.print(classify_metallic(ci))
        return 0
    frame = tube_frame(ci)
    surface = build_swnt(ci, n_periods=config.nanotube.periods)
    err.print(
        f"SWNT {frame.chiral}: T = {frame.primitive_translation}, radius {frame.radius:.10f}, "
        f"{surface.vertex_count} atoms, {classify_metallic(ci)}"
    )
    _emit(get_exporter(config)(surface, name=f"swnt_{args.c1}_{args.c2}"), args.output)
    return 0


def cmd_band(args: argparse.Namespace, config: DictConfig) -> int:
    lower, upper = graphene_band((0.0, 0.0))
    out.print(f"Gamma: E- = {lower:.12f}, E+ = {upper:.12f}")
    points = dirac_scan(config.band.grid, tol=config.band.dirac_tol)
    table = Table(title=f"Dirac points on the {config.band.grid} x {config.band.grid} grid")
    for column in ("i", "j", "xi1", "xi2"):
        table.add_column(column, justify="right")
    for i, j, xi1, xi2 in points:
        table.add_row(str(i), str(j), f"{xi1:.12f}", f"{xi2:.12f}")
    out.print(table)
    return 0


def cmd_spectrum(args: argparse.Namespace, config: DictConfig) -> int:
    g = crystal_graph(load_cg(args.file))
    if args.electrons is None:
        spectrum = adjacency_spectrum(g)
        out.print("eigenvalues: " + " ".join(f"{x:.12f}" for x in spectrum))
        return 0
    result = huckel(g, args.electrons, degeneracy_tol=config.huckel.degeneracy_tol)
    table = Table(title=f"Hückel orbitals, {args.electrons} electrons")
    for column in ("orbital", "lambda", "occupation"):
        table.add_column(column, justify="right")
    for k, (value, occupation) in enumerate(zip(result.eigenvalues, result.occupations)):
        table.add_row(str(k), f"{value:.12f}", f"{occupation:.6f}")
    out.print(table)
    out.print("density: " + " ".join(f"{x:.12f}" for x in result.density))
    if result.gap is not None:
        out.print(f"HOMO {result.homo:.12f}, LUMO {result.lumo:.12f}, gap {result.gap:.12f}")
    return 0


def cmd_girth(args: argparse.Namespace, config: DictConfig) -> int:
    crystal = load_cg(args.file)
    g = crystal_graph(crystal)
    labels = covering_labels(crystal, g, spanning_tree(g))
    out.print(periodic_girth(g, labels, radius_cap=config.girth.cap))
    return 0


def cmd_template(args: argparse.Namespace, config: DictConfig) -> int:
    if args.name not in TEMPLATES:
        raise InvalidInputError(f"Unknown template {args.name!r}. Valid templates are {sorted(TEMPLATES)}")
    _emit(export(TEMPLATES[args.name](), "json", name=args.name), args.output)
    return 0


def get_arguments_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lattice_forge", description=__doc__)
    parser.add_argument("--log-level", default="WARNING", help="logging level of the library loggers")
    parser.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Hydra override, may be repeated (e.g. --set relax.step=0.25)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    realize = commands.add_parser("realize", help="standard realization of a .cg crystal graph")
    realize.add_argument("file")
    realize.add_argument("--method", choices=("homology", "direct"))
    realize.add_argument("--supercell", type=int, nargs="+", metavar="N")
    realize.add_argument("--out", choices=("json", "xyz", "obj", "csv"))
    realize.add_argument("--output")
    realize.set_defaults(handler=cmd_realize)

    verify = commands.add_parser("verify", help="recheck a stored realization")
    verify.add_argument("file")
    verify.set_defaults(handler=cmd_verify)

    curvature = commands.add_parser("curvature", help="curvature of a geometry document")
    curvature.add_argument("file")
    curvature.add_argument("--per-vertex", action="store_true")
    curvature.add_argument("--check-gauss", action="store_true")
    curvature.add_argument("--check-area-variation", action="store_true")
    curvature.set_defaults(handler=cmd_curvature)

    euler = commands.add_parser("euler", help="face statistics and Euler characteristic")
    euler.add_argument("file")
    euler.set_defaults(handler=cmd_euler)

    minimal = commands.add_parser("minimal", help="mean curvature residuals, optionally relaxed")
    minimal.add_argument("file")
    minimal.add_argument("--tol", type=float)
    minimal.add_argument("--max-iters", type=int)
    minimal.add_argument("--relax", action="store_true")
    minimal.add_argument("--fixed", type=int, nargs="+", default=None, metavar="V")
    minimal.add_argument("--output")
    minimal.set_defaults(handler=cmd_minimal)

    nanotube = commands.add_parser("nanotube", help="single-wall nanotube of chiral index (c1, c2)")
    nanotube.add_argument("c1", type=int)
    nanotube.add_argument("c2", type=int)
    nanotube.add_argument("--periods", type=int)
    nanotube.add_argument("--lambda", dest="scale", type=float)
    nanotube.add_argument("--classify", action="store_true")
    nanotube.add_argument("--out", choices=("json", "xyz", "obj", "csv"))
    nanotube.add_argument("--output")
    nanotube.set_defaults(handler=cmd_nanotube)

    band = commands.add_parser("band", help="graphene bands and Dirac points")
    band.add_argument("--grid", type=int)
    band.add_argument("--dirac-tol", type=float)
    band.set_defaults(handler=cmd_band)

    spectrum = commands.add_parser("spectrum", help="adjacency spectrum and Hückel orbitals")
    spectrum.add_argument("file")
    spectrum.add_argument("--electrons", type=int)
    spectrum.set_defaults(handler=cmd_spectrum)

    girth = commands.add_parser("girth", help="girth of the periodic lift")
    girth.add_argument("file")
    girth.add_argument("--cap", type=int)
    girth.set_defaults(handler=cmd_girth)

    template = commands.add_parser("template", help="write a built-in geometry document")
    template.add_argument("name", choices=sorted(TEMPLATES))
    template.add_argument("--output")
    template.set_defaults(handler=cmd_template)
    return parser


def config_overrides(args: argparse.Namespace) -> list[str]:
    """Dedicated flags as Hydra overrides; explicit --set entries come last and win."""
    flags = {
        "method": "solver={}",
        "out": "export={}",
        "cap": "girth.cap={}",
        "tol": "relax.tol={}",
        "max_iters": "relax.max_iters={}",
        "periods": "nanotube.periods={}",
        "scale": "nanotube.scale={}",
        "grid": "band.grid={}",
        "dirac_tol": "band.dirac_tol={}",
    }
    overrides = [
        template.format(getattr(args, name))
        for name, template in flags.items()
        if getattr(args, name, None) is not None
    ]
    if getattr(args, "supercell", None):
        overrides.append("supercell=[" + ",".join(str(n) for n in args.supercell) + "]")
    return overrides + list(args.overrides)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = get_arguments_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        format="%(message)s",
        handlers=[RichHandler(console=err, show_path=False)],
        force=True,
    )
    try:
        config = load_config(config_overrides(args))
        return args.handler(args, config)
    except NumericalError as exc:
        err.print(f"[red]numerical failure:[/red] {escape(str(exc))}")
        return 2
    except (InvalidInputError, ValidationError, ValueError, OSError, HydraException) as exc:
        err.print(f"[red]invalid input:[/red] {escape(str(exc))}")
        return 1
