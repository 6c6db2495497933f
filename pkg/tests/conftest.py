import pytest

from wsh.field import RationalFunctionField
from wsh.operators import OpContext


@pytest.fixture(scope="session")
def field():
    return RationalFunctionField()


@pytest.fixture(scope="session")
def ctx6(field):
    """Shared small truncation context for unit tests."""
    return OpContext(field, 6)


@pytest.fixture(scope="session")
def ctx8(field):
    """Reference truncation context (shared with the acceptance suite)."""
    return OpContext(field, 8)
