import pytest

from pqosc import validate


@pytest.fixture
def base_params():
    """The (2, 3, 1, 0, 1) fixture used throughout: weights 0, 1, 3.5, ..."""
    return validate(2.0, 3.0, 1.0, 0.0, 1.0)
