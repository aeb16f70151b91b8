import pytest

from birburn.toric import Embedding


@pytest.fixture
def e512():
    return Embedding(5, 1, 2)
