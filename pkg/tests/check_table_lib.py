"""Testing the library implementation of table rendering and output."""

# type annotations
from __future__ import annotations

# standard libraries
import json

# external libraries
import pytest

# internal libraries
from wignerkit.core.error import DomainError, LibraryError
from wignerkit.support.table import OutputManager, format_value, render, validate_output

HEADER = ['a', 'b', 'c']
ROWS = [{'a': 0.1, 'b': 1.0, 'c': True}, {'a': 2.5612496949731396, 'b': 0.0, 'c': False}]

@pytest.mark.lib
@pytest.mark.parametrize('value, precision, expected', [
    (0.1, 12, '0.1'),
    (1.0, 12, '1'),
    (0.0, 12, '0'),
    (2.5612496949731396, 6, '2.56125'),
    (2.5612496949731396, 17, '2.5612496949731396'),
    (35.0 / 37.0, 3, '0.946'),
    (True, 12, 'true'),
    (False, 12, 'false'),
    ('gamma', 12, 'gamma'),
    ])
def check_format_value(value, precision, expected):
    """Verify shortest round trip decimals at the given significant digits."""
    assert format_value(value, precision) == expected

@pytest.mark.lib
def check_render_csv():
    """Verify a single header line, LF endings, and no quoting."""
    text = render(ROWS, HEADER, format='csv', precision=6)
    assert text == 'a,b,c\n0.1,1,true\n2.56125,0,false\n'
    assert '\r' not in text

@pytest.mark.lib
def check_render_json():
    """Verify an array of flat records with the same field names."""
    records = json.loads(render(ROWS, HEADER, format='json', precision=6))
    assert records == [{'a': 0.1, 'b': 1.0, 'c': True}, {'a': 2.56125, 'b': 0.0, 'c': False}]

@pytest.mark.lib
@pytest.mark.parametrize('format, precision', [('xml', 12), ('csv', 0), ('csv', 18), ('json', True), ('csv', 1.5)])
def check_validate_output(format, precision):
    """Verify unknown formats and precisions are refused."""
    with pytest.raises(DomainError):
        validate_output(format=format, precision=precision)

@pytest.mark.lib
def check_output_file(scratch):
    """Verify writing to a file and the error naming a bad path."""
    path = scratch.joinpath('table.csv')
    with OutputManager(str(path)) as output:
        output.write('a,b\n1,2\n')
    assert path.read_text() == 'a,b\n1,2\n'
    missing = scratch.joinpath('missing', 'table.csv')
    with pytest.raises(LibraryError, match='missing'):
        with OutputManager(str(missing)) as output:
            output.write('a\n')

@pytest.mark.lib
def check_output_stdout(capsys):
    """Verify writing to standard output when no path is given."""
    with OutputManager('') as output:
        output.write('a\n1\n')
    assert output.where == 'standard output'
    assert capsys.readouterr().out == 'a\n1\n'
