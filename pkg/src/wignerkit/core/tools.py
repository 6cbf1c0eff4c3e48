"""Small helpers shared by the core modules."""

# type annotations
from __future__ import annotations
from typing import Any, Optional
from collections.abc import Mapping, Sequence

# define library (public) interface
__all__ = ['is_interactive', 'lookup', ]

def is_interactive() -> bool:
    """Running inside an IPython (or Jupyter) session."""
    try:
        from IPython import get_ipython # type: ignore
    except ImportError:
        return False
    return get_ipython() is not None

def lookup(path: Sequence[str], tree: Mapping[str, Any]) -> Optional[Any]:
    """Value at the end of a path of keys through nested mappings; None if any key is missing."""
    node: Any = tree
    for key in path:
        if not isinstance(node, Mapping) or key not in node:
            return None
        node = node[key]
    return node
