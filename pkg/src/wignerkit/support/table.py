"""Support methods provided for rendering and writing result tables (csv or json) to a file or standard output."""

#type annotations
from __future__ import annotations
from typing import Any, Iterable, Mapping, Optional, TextIO

# standard libraries
import csv
import io
import json
import logging
import os
import sys

# internal libraries
from ..core import parallel
from ..core.error import DomainError, LibraryError
from ..resources import CONFIG

# external libraries
import numpy

logger = logging.getLogger(__name__)

# define public interface
__all__ = ['FORMATS', 'OutputManager', 'format_value', 'render', 'validate_output', ]

# define configuration constants (internal)
DELIMITER = CONFIG['support']['table']['delimiter']
NEWLINE = CONFIG['support']['table']['newline']
INDENT = CONFIG['support']['table']['indent']

FORMATS = ('csv', 'json')
PRECISION = (1, 17)

def validate_output(*, format: str, precision: int) -> None:
    """Check the output format and the number of significant digits."""
    if format not in FORMATS:
        raise DomainError(f'Unknown output format {format!r}; expected one of {FORMATS}!')
    low, high = PRECISION
    if isinstance(precision, bool) or not isinstance(precision, (int, numpy.integer)) or not low <= precision <= high:
        raise DomainError(f'Precision {precision!r} must be an integer within [{low}, {high}]!')

def format_value(value: Any, precision: int) -> str:
    """Shortest round trip decimal of a real value at the given significant digits."""
    if isinstance(value, (bool, numpy.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (float, numpy.floating, int, numpy.integer)):
        return numpy.format_float_positional(float(value), precision=precision, unique=True, fractional=False, trim='-')
    return str(value)

def jsonify(value: Any, precision: int) -> Any:
    if isinstance(value, (bool, numpy.bool_)):
        return bool(value)
    if isinstance(value, (float, numpy.floating, int, numpy.integer)):
        return float(format_value(value, precision))
    return value

def render(rows: Iterable[Mapping[str, Any]], header: Iterable[str], *, format: str = 'csv', precision: int = 12) -> str:
    """Render rows of a table; csv with a single header line and LF endings, or json as an array of records."""
    validate_output(format=format, precision=precision)
    header = list(header)
    if format == 'json':
        records = [{key: jsonify(row[key], precision) for key in header} for row in rows]
        return json.dumps(records, indent=INDENT) + NEWLINE
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter=DELIMITER, lineterminator=NEWLINE, quoting=csv.QUOTE_NONE)
    writer.writerow(header)
    writer.writerows([format_value(row[key], precision) for key in header] for row in rows)
    return buffer.getvalue()

class OutputManager:
    """Context Manager for writing a table to a file path, or to standard output when no path is given;
    only the root process writes."""

    def __init__(self, path: Optional[str] = None):
        self.path = os.path.realpath(os.path.expanduser(path)) if path else None
        self.safe = parallel.is_root()
        self.stream: Optional[TextIO] = None

    def __enter__(self):
        self.open()
        return self

    def __exit__(self, *args):
        self.close()

    @property
    def where(self) -> str:
        return 'standard output' if self.path is None else os.path.relpath(self.path)

    def open(self) -> None:
        """Open the destination; raises a LibraryError naming the path on failure."""
        if not self.safe: return
        if self.path is None:
            self.stream = sys.stdout
            return
        try:
            self.stream = open(self.path, mode='w', newline='')
        except OSError as error:
            raise LibraryError(f'Unable to open {self.path} for writing ({error.strerror})!') from error

    def close(self) -> None:
        if self.stream is None: return
        if self.path is None:
            self.stream.flush()
        else:
            self.stream.close()
        self.stream = None

    def write(self, text: str) -> None:
        if self.stream is None: return
        try:
            self.stream.write(text)
        except OSError as error:
            raise LibraryError(f'Unable to write to {self.where} ({error.strerror})!') from error
