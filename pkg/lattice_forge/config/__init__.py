from typing import Optional, Sequence

from hydra import compose, initialize_config_module
from omegaconf import DictConfig


def load_config(overrides: Optional[Sequence[str]] = None) -> DictConfig:
    """Compose `config.yaml` with Hydra overrides such as `solver=direct` or `girth.cap=30`."""
    with initialize_config_module(config_module="lattice_forge.config", version_base=None):
        return compose(config_name="config", overrides=list(overrides or []))
