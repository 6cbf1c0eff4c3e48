"""Testing the cli for analyze, sweep, cnot-limit, and selftest operations."""

# standard libraries
import os
from unittest.mock import patch

# external libraries
import pytest
from hypothesis import given, strategies
from cmdkit.app import ExitStatus

# internal libraries
from wignerkit.cli import main
from wignerkit.cli import analyze, cnot, sweep
from wignerkit.core.error import NumericalError
from wignerkit.library.selftest import SuiteResult
from wignerkit.resources import CONFIG
from wignerkit.support.table import FORMATS

STATUS = ExitStatus()
INTERNAL = CONFIG['core']['custom']['internal']
DOMAIN = CONFIG['core']['custom']['domain']

# define property testing strategies
bools = strategies.booleans()
speeds = strategies.floats(min_value=0.0, max_value=1.0)
tlists = strategies.lists(speeds, min_size=1, max_size=6)
grids = strategies.integers(min_value=2, max_value=1000)
formats = strategies.sampled_from(FORMATS)
digits = strategies.integers(min_value=1, max_value=17)
words = strategies.text(min_size=1, alphabet=strategies.characters(
    whitelist_categories=('Lu', 'Ll', 'Nd', ),
    blacklist_characters=('/')))

@pytest.fixture(scope='module')
def mocked(module_mocker):
    """Supporting mock facilities for cli testing."""
    module_mocker.patch('wignerkit.cli.analyze.analyze', return_value=None)
    module_mocker.patch('wignerkit.cli.sweep.sweep', return_value=None)
    module_mocker.patch('wignerkit.cli.cnot.cnot', return_value=None)
    return module_mocker

@pytest.mark.cli
@pytest.mark.parametrize('command', ['', 'analyze', 'sweep', 'cnot-limit', 'selftest'])
def check_help(command):
    """Verify that help message works properly."""
    assert STATUS.success == os.WEXITSTATUS(os.system(f'wignerkit {command} --help'))
    assert STATUS.success == os.WEXITSTATUS(os.system(f'wignerkit {command} -h'))

@pytest.mark.cli
def check_version():
    """Verify that version message works properly."""
    assert STATUS.success == os.WEXITSTATUS(os.system('wignerkit --version'))
    assert STATUS.success == os.WEXITSTATUS(os.system('wignerkit -v'))

@pytest.mark.cli
def check_badargs():
    """Verify that bad args fails with correct exit status."""
    assert STATUS.bad_argument == os.WEXITSTATUS(os.system('wignerkit bogus'))
    assert STATUS.bad_argument == os.WEXITSTATUS(os.system('wignerkit analyze --bob'))
    assert STATUS.bad_argument == os.WEXITSTATUS(os.system('wignerkit analyze -x fast'))
    assert STATUS.bad_argument == os.WEXITSTATUS(os.system('wignerkit analyze -f xml'))
    assert STATUS.bad_argument == os.WEXITSTATUS(os.system('wignerkit sweep -n 1.5'))
    assert STATUS.bad_argument == os.WEXITSTATUS(os.system('wignerkit cnot-limit -p two'))

@pytest.mark.cli
def check_domain(scratch):
    """Verify that inputs outside the domain fail with the usage status and write nothing."""
    path = scratch.joinpath('domain.csv')
    assert DOMAIN == os.WEXITSTATUS(os.system(f'wignerkit analyze -x 1.5 -o {path}'))
    assert DOMAIN == os.WEXITSTATUS(os.system(f'wignerkit sweep -n 1 -o {path}'))
    assert DOMAIN == os.WEXITSTATUS(os.system(f'wignerkit sweep -X 0.5 -o {path}'))
    assert DOMAIN == os.WEXITSTATUS(os.system(f'wignerkit cnot-limit -t 0.5,2 -o {path}'))
    assert DOMAIN == os.WEXITSTATUS(os.system(f'wignerkit selftest bogus.suite -o {path}'))
    assert not path.exists()

    with patch('sys.argv', ['wignerkit', 'analyze', '--v1', '2']):
        assert DOMAIN == main()

@pytest.mark.cli
def check_analyze_output(scratch):
    """Verify that a record is written from the command line."""
    path = scratch.joinpath('record.csv')
    assert STATUS.success == os.WEXITSTATUS(os.system(f'wignerkit analyze -x 1 -y 1 -o {path}'))
    header, row = path.read_text().splitlines()
    assert header == 'v1,v2,omega,cos2w,S,E,B,C'
    assert row.split(',')[5] == '0'

@pytest.mark.cli
def check_numerical_failure(mocker):
    """Verify that a numerical failure exits with the internal status."""
    mocker.patch('wignerkit.api._analyze.analyze_pair', side_effect=NumericalError('disagreement'))
    with patch('sys.argv', ['wignerkit', 'analyze', '-x', '0.5']):
        assert INTERNAL == main()

@pytest.mark.cli
def check_selftest_failure(scratch, mocker):
    """Verify that a failed suite exits with the internal status."""
    failed = SuiteResult(suite='cnot.limits', observed=0.5, tolerance=1e-12, worst='t=1.0', passed=False)
    mocker.patch('wignerkit.api._selftest.run_suites', return_value=[failed, ])
    path = scratch.joinpath('report.csv')
    with patch('sys.argv', ['wignerkit', 'selftest', '-o', str(path)]):
        assert INTERNAL == main()
    assert path.exists()

@pytest.mark.cli
def check_selftest_listing(capsys):
    """Verify that the suites are listed."""
    with patch('sys.argv', ['wignerkit', 'selftest', '--list']):
        assert STATUS.success == main()
    listing = capsys.readouterr().out.split()
    assert 'kinematics.identity' in listing
    assert 'cnot.limits' in listing

@pytest.mark.cli
@given(v1=speeds, v2=speeds, out=words, format=formats, precision=digits, noverify=bools)
def check_analyze_options(v1, v2, out, format, precision, noverify, mocked):
    """Verify that the expected cli options work properly."""

    expected = {'v1': v1, 'v2': v2, 'out': out, 'format': format, 'precision': precision}
    if noverify: expected['verify'] = False

    # test short form of arguments
    _noverify = '-N ' if noverify else ''
    provided = f'-x{v1!r} -y{v2!r} -o{out} -f{format} -p{precision} {_noverify}'.split()
    with patch('sys.argv', ['wignerkit', 'analyze'] + provided):
        assert STATUS.success == main()
        analyze.analyze.assert_called_with(**expected, cmdline=True)

    # test long form of arguments
    _noverify = '--noverify ' if noverify else ''
    provided = f'--v1 {v1!r} --v2 {v2!r} --out {out} --format {format} --precision {precision} {_noverify}'.split()
    with patch('sys.argv', ['wignerkit', 'analyze'] + provided):
        assert STATUS.success == main()
        analyze.analyze.assert_called_with(**expected, cmdline=True)

@pytest.mark.cli
@given(grid=grids, v1range=tlists, v2range=tlists, out=words, format=formats, precision=digits, verify=bools)
def check_sweep_options(grid, v1range, v2range, out, format, precision, verify, mocked):
    """Verify that the expected cli options work properly."""

    expected = {'grid': grid, 'v1range': v1range, 'v2range': v2range, 'out': out,
                'format': format, 'precision': precision}
    if verify: expected['verify'] = True

    # test short form of arguments
    _v1range = ','.join(repr(v) for v in v1range)
    _v2range = ','.join(repr(v) for v in v2range)
    _verify = '-C ' if verify else ''
    provided = f'-n{grid} -X{_v1range} -Y{_v2range} -o{out} -f{format} -p{precision} {_verify}'.split()
    with patch('sys.argv', ['wignerkit', 'sweep'] + provided):
        assert STATUS.success == main()
        sweep.sweep.assert_called_with(**expected, cmdline=True)

    # test long form of arguments
    _verify = '--verify ' if verify else ''
    provided = f'--grid {grid} --v1-range {_v1range} --v2-range {_v2range} --out {out} ' \
               f'--format {format} --precision {precision} {_verify}'.split()
    with patch('sys.argv', ['wignerkit', 'sweep'] + provided):
        assert STATUS.success == main()
        sweep.sweep.assert_called_with(**expected, cmdline=True)

@pytest.mark.cli
@given(tlist=tlists, out=words, format=formats, precision=digits)
def check_cnot_options(tlist, out, format, precision, mocked):
    """Verify that the expected cli options work properly."""

    expected = {'tlist': tlist, 'out': out, 'format': format, 'precision': precision}

    # test short form of arguments
    _tlist = ','.join(repr(t) for t in tlist)
    provided = f'-t{_tlist} -o{out} -f{format} -p{precision}'.split()
    with patch('sys.argv', ['wignerkit', 'cnot-limit'] + provided):
        assert STATUS.success == main()
        cnot.cnot.assert_called_with(**expected, cmdline=True)

    # test long form of arguments
    provided = f'--t-list {_tlist} --out {out} --format {format} --precision {precision}'.split()
    with patch('sys.argv', ['wignerkit', 'cnot-limit'] + provided):
        assert STATUS.success == main()
        cnot.cnot.assert_called_with(**expected, cmdline=True)
