from pathlib import Path

REPOSITORY_PATH = Path(__file__).parent.parent.parent
DATA_DIR = REPOSITORY_PATH / "data"
CRYSTALS_DIR = DATA_DIR / "crystals"
AUTOMATIC_CRYSTALS_DIR = CRYSTALS_DIR / "automatic"
MOLECULES_DIR = DATA_DIR / "molecules"

# Numerical tolerances
RESIDUAL_TOL = 1e-9
DEGENERACY_FACTOR = 1e-12
DEGENERATE_LEVEL_TOL = 1e-9

DEFAULT_GIRTH_CAP = 20
DEFAULT_RELAX_STEP = 0.5

SEED_ENV_VAR = "LATTICE_FORGE_SEED"
DEFAULT_SEED = 1337

# Element symbol written to XYZ files
DEFAULT_ELEMENT = "C"
