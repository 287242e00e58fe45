import numpy as np
import pytest

from lattice_forge.io.cg_format import load_cg
from lattice_forge.realization.solvers import crystal_graph, solve_direct, solve_homology
from lattice_forge.utils.seed import seed_from_env, set_seed
from lattice_forge.utils.settings import AUTOMATIC_CRYSTALS_DIR, CRYSTALS_DIR, MOLECULES_DIR

SQRT2, SQRT3, SQRT6 = np.sqrt(2), np.sqrt(3), np.sqrt(6)


def crystal(name: str, automatic: bool = False):
    directory = AUTOMATIC_CRYSTALS_DIR if automatic else CRYSTALS_DIR
    return load_cg(directory / f"{name}.cg")


def molecule_graph(name: str):
    return crystal_graph(load_cg(MOLECULES_DIR / f"{name}.cg"))


def realize(name: str, method: str = "homology", automatic: bool = False):
    solver = solve_homology if method == "homology" else solve_direct
    return solver(crystal(name, automatic))


@pytest.fixture(scope="session")
def seed() -> int:
    return seed_from_env()


@pytest.fixture
def rng(seed) -> np.random.Generator:
    return set_seed(seed)
