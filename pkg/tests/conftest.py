"""Supporting pytest fixtures for WignerKit testing."""

# external libraries
import pytest

@pytest.fixture(scope='session')
def scratch(tmp_path_factory):
    """Blank directory shared by the tests which write tables."""
    return tmp_path_factory.mktemp('scratch')
