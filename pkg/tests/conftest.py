import pytest

from hbknots.construction import ConstructionParams, generate_pattern
from hbknots.disksearch import SearchContext


@pytest.fixture(scope="session")
def ctx_cache():
    cache = {}

    def get(p, q):
        if (p, q) not in cache:
            cache[(p, q)] = SearchContext.build(ConstructionParams(p, q))
        return cache[(p, q)]
    return get


@pytest.fixture(scope="session")
def g23():
    return generate_pattern(ConstructionParams(2, 3))
