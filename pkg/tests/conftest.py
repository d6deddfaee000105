import pytest

from semirep.core.fields import PrimeField, RationalField
from semirep.corpus import load_corpus


@pytest.fixture(scope="session")
def corpus():
    cache = {}

    def load(name):
        if name not in cache:
            cache[name] = load_corpus(name)
        return cache[name]

    return load


@pytest.fixture(scope="session")
def Q():
    return RationalField()


@pytest.fixture(scope="session")
def F2():
    return PrimeField(2)


@pytest.fixture(scope="session")
def F3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def T2(corpus):
    """Full transformation monoid on two points: swap=0, c0=1, id=2, c1=3."""
    return corpus("full_transformation2")
