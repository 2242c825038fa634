import pytest

from redvar import lie


@pytest.fixture
def rng():
    return lie.rng(2024)
