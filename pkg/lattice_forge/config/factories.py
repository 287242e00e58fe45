from typing import Callable

from omegaconf import DictConfig, OmegaConf

import lattice_forge.io.exporters as exporters
import lattice_forge.realization.solvers as solvers
from lattice_forge.utils.datatypes import CrystalGraphFile, CrystalRealization


def get_solver(config: DictConfig) -> Callable[[CrystalGraphFile], CrystalRealization]:
    name = config.solver.name
    if not name.startswith("solve_") or not hasattr(solvers, name):
        raise ValueError(f"Unknown solver {name!r}. Valid solvers are ['solve_direct', 'solve_homology']")
    return getattr(solvers, name)


def get_exporter(config: DictConfig) -> Callable[..., bytes]:
    name = config.export.name
    exporter = exporters.EXPORTERS.get(name)
    if exporter is None:
        raise ValueError(f"Unknown exporter {name!r}. Valid exporters are {sorted(exporters.EXPORTERS)}")
    options = OmegaConf.to_container(config.export.configs)
    return lambda obj, **extra: exporter(obj, **{**options, **extra})
