"""Types for parsing command line values."""

# type annotations
from __future__ import annotations

# standard libraries
import re

# define library (public) interface
__all__ = ['ListFloat', ]

def ListFloat(text: str) -> list[float]:
    """Reals separated by commas or spaces (e.g., 0,0.5,1)."""
    return [float(item) for item in re.split(r'[,\s]+', text.strip()) if item]
