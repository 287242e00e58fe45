import logging
import os
import random
from typing import Optional

import numpy as np
from dotenv import find_dotenv, load_dotenv

from lattice_forge.utils.settings import DEFAULT_SEED, SEED_ENV_VAR

LOGGER = logging.getLogger(name="lattice_forge.utils.random")


def set_seed(seed: int) -> np.random.Generator:
    """Set the random number generation seed globally for `numpy` and `random` and return a fresh Generator"""
    os.environ["PYTHONHASHSEED"] = str(seed)
    np.random.seed(seed)
    random.seed(seed)
    LOGGER.info("Set 'numpy' and 'random' random seed to %s", seed)
    return np.random.default_rng(seed)


def get_random_seed() -> int:
    """Return a random seed between 0 and 2**32 - 1"""
    return random.randint(a=0, b=2**32 - 1)


def seed_from_env(default: Optional[int] = DEFAULT_SEED) -> int:
    """Read the seed from `.env` / the environment, falling back to `default`."""
    load_dotenv(find_dotenv(usecwd=True))
    value = os.getenv(SEED_ENV_VAR)
    if value is None or value.strip() == "":
        return default if default is not None else get_random_seed()
    return int(value)
