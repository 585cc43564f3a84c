import pytest

from hurwitzhodge.workspace import Workspace


@pytest.fixture(scope="session")
def ws():
    """One workspace for the whole run, so solved regions and polynomials are shared."""
    return Workspace()
