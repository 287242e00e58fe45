"""Reader and writer for the line-oriented crystal graph (.cg) format.

    # comment
    dim d
    vertex NAME
    edge NAME NAME [n1 ... nd]
    basis i c_1 ... c_|E|
    vanish c_1 ... c_|E|

Edges are numbered in file order. `basis` lines override the cycle basis
(1-based index, integer chain over the edges); `vanish` lines declare cycles
that realize to zero.
"""
import logging
from pathlib import Path
from typing import Optional

from lattice_forge.utils.datatypes import CrystalGraphFile
from lattice_forge.utils.errors import CrystalFileError

logger = logging.getLogger(__name__)

DIRECTIVES = ("dim", "vertex", "edge", "basis", "vanish")


def _integers(tokens: list[str], line_number: int) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise CrystalFileError(f"expected integers, got {' '.join(tokens)!r}", line_number) from None


def parse_cg(text: str, name: str = "") -> CrystalGraphFile:
    """Parse .cg text; every error names the offending line."""
    dimension: Optional[int] = None
    names: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    labels: list[Optional[tuple[int, ...]]] = []
    basis_lines: list[tuple[int, list[str]]] = []
    vanish_lines: list[tuple[int, list[str]]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        directive, args = tokens[0], tokens[1:]
        if directive not in DIRECTIVES:
            raise CrystalFileError(f"unknown directive {directive!r}", line_number)

        if directive == "dim":
            if len(args) != 1:
                raise CrystalFileError("dim takes exactly one integer", line_number)
            if dimension is not None:
                raise CrystalFileError("dim declared twice", line_number)
            if edges:
                raise CrystalFileError("dim must precede the edges", line_number)
            (dimension,) = _integers(args, line_number)
            if dimension < 1:
                raise CrystalFileError(f"dim must be positive, got {dimension}", line_number)
        elif directive == "vertex":
            if len(args) != 1:
                raise CrystalFileError("vertex takes exactly one name", line_number)
            if args[0] in index:
                raise CrystalFileError(f"duplicate vertex {args[0]!r}", line_number)
            index[args[0]] = len(names)
            names.append(args[0])
        elif directive == "edge":
            if len(args) < 2:
                raise CrystalFileError("edge needs two vertex names", line_number)
            for vertex in args[:2]:
                if vertex not in index:
                    raise CrystalFileError(f"unknown vertex {vertex!r}", line_number)
            label = None
            if len(args) > 2:
                if dimension is None:
                    raise CrystalFileError("edge label given without a dim declaration", line_number)
                label = tuple(_integers(args[2:], line_number))
                if len(label) != dimension:
                    raise CrystalFileError(
                        f"label has {len(label)} entries, dim is {dimension}", line_number
                    )
            edges.append((index[args[0]], index[args[1]]))
            labels.append(label)
        elif directive == "basis":
            if not args:
                raise CrystalFileError("basis needs an index and coefficients", line_number)
            basis_lines.append((line_number, args))
        else:
            vanish_lines.append((line_number, args))

    if not names:
        raise CrystalFileError("no vertices declared")

    m = len(edges)
    basis: dict[int, tuple[int, ...]] = {}
    for line_number, args in basis_lines:
        values = _integers(args, line_number)
        if len(values) != m + 1:
            raise CrystalFileError(f"basis needs an index and {m} coefficients, got {len(values) - 1}", line_number)
        position, coefficients = values[0], tuple(values[1:])
        if position in basis:
            raise CrystalFileError(f"basis index {position} given twice", line_number)
        if position < 1:
            raise CrystalFileError(f"basis index must be positive, got {position}", line_number)
        basis[position] = coefficients
    if basis and sorted(basis) != list(range(1, len(basis) + 1)):
        raise CrystalFileError(f"basis indices must run 1..{len(basis)}, got {sorted(basis)}")

    vanish = []
    for line_number, args in vanish_lines:
        values = _integers(args, line_number)
        if len(values) != m:
            raise CrystalFileError(f"vanish needs {m} coefficients, got {len(values)}", line_number)
        vanish.append(tuple(values))

    full_labels = None
    if dimension is not None:
        zero = (0,) * dimension
        full_labels = tuple(label if label is not None else zero for label in labels)

    return CrystalGraphFile(
        vertex_names=tuple(names),
        edges=tuple(edges),
        dimension=dimension,
        labels=full_labels,
        basis=tuple(basis[i] for i in sorted(basis)),
        vanish=tuple(vanish),
        name=name,
    )


def load_cg(path: Path | str) -> CrystalGraphFile:
    path = Path(path)
    logger.info("Loading crystal graph %s", path)
    return parse_cg(path.read_text(encoding="utf-8"), name=path.stem)


def emit_cg(cg: CrystalGraphFile) -> str:
    """Canonical .cg text; `parse_cg(emit_cg(cg))` equals `cg` up to the name."""
    lines = [f"# {cg.name}"] if cg.name else []
    if cg.dimension is not None:
        lines.append(f"dim {cg.dimension}")
    lines.extend(f"vertex {name}" for name in cg.vertex_names)
    for k, (o, t) in enumerate(cg.edges):
        line = f"edge {cg.vertex_names[o]} {cg.vertex_names[t]}"
        if cg.labels is not None:
            line += " " + " ".join(str(x) for x in cg.labels[k])
        lines.append(line)
    for i, chain in enumerate(cg.basis, start=1):
        lines.append(f"basis {i} " + " ".join(str(x) for x in chain))
    for chain in cg.vanish:
        lines.append("vanish " + " ".join(str(x) for x in chain))
    return "\n".join(lines) + "\n"

