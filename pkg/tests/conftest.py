import pytest

from src.models.context import JacobianContext
from src.services import table_cache


@pytest.fixture
def make_context():
    """Factory for contexts: make_context(g) or make_context(g, d)"""
    def _make(genus, gonality=None):
        return JacobianContext(genus=genus, gonality=gonality)
    return _make


@pytest.fixture
def genus_two(make_context):
    return make_context(2)


@pytest.fixture
def genus_three(make_context):
    return make_context(3)


@pytest.fixture
def genus_four(make_context):
    return make_context(4)


@pytest.fixture
def fresh_cache():
    """Start from an empty table cache"""
    table_cache.clear_cache()
    yield
    table_cache.clear_cache()
