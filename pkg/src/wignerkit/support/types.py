"""Supporting type annotations for support and library sub-packages."""

# type annotations
from __future__ import annotations
from typing import TYPE_CHECKING

# static analysis
if TYPE_CHECKING:
   
    # standard libraries
    from typing import Any, Callable, Dict, List, Tuple

    # internal libraries
    from .measures import AnalysisRecord

    # result tables
    Row = Dict[str, Any]
    Rows = List[Row]
    Records = List[AnalysisRecord]
    Fidelities = List[Tuple[float, float, float]]

    # progress bar update
    Tick = Callable[..., None]

# deal w/ runtime cast and import
else:

    # result tables
    Row = None
    Rows = None
    Records = None
    Fidelities = None

    # progress bar update
    Tick = None
