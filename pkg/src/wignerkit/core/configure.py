"""Packaged defaults of each command, with the shared (general) options planted in, layered under caller arguments."""

# type annotations
from __future__ import annotations
from typing import Any
from collections.abc import Mapping

# standard libraries
import copy
import logging

# external libraries
from cmdkit.config import Configuration, Namespace

# internal libraries
from .tools import lookup
from ..resources import DEFAULTS, MAPPING

logger = logging.getLogger(__name__)

# define library (public) interface
__all__ = ['get_defaults', 'plant_shared', ]

def plant_shared(defaults: Mapping[str, Any], mapping: Mapping[str, Any]) -> dict[str, Any]:
    """Copy the shared options named by the mapping (e.g., analyze.out <- general.output.out) into each
    command section; options a command sets itself are kept."""
    planted = copy.deepcopy(dict(defaults))
    for command, options in mapping.items():
        section = planted.setdefault(command, {})
        for option, path in options.items():
            value = lookup(path, defaults)
            if value is not None:
                section.setdefault(option, copy.deepcopy(value))
    return planted

def get_defaults(*, local: Mapping[str, Any] = {}) -> Configuration:
    """Caller arguments (local) layered over the packaged defaults (system)."""
    logger.debug(f'core -- Layering {list(local)} over the packaged defaults.')
    return Configuration(system=Namespace(plant_shared(DEFAULTS, MAPPING)), local=Namespace(local))
