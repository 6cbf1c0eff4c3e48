"""Resources initialization for WignerKit."""

# standard libraries
from importlib.resources import files

# external libraries
import toml

__all__ = ['DEFAULTS', 'CONFIG', 'MAPPING', ]

DEFAULTS = toml.loads(files(__package__).joinpath('defaults.toml').read_text())
CONFIG = toml.loads(files(__package__).joinpath('config.toml').read_text())
MAPPING = toml.loads(files(__package__).joinpath('mapping.toml').read_text())
