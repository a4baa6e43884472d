import pytest

from psyquiver.corpus import Corpus
from psyquiver.diagram import parse_diagram


@pytest.fixture(scope="session")
def corpus():
    return Corpus()


@pytest.fixture(scope="session")
def qui1(corpus):
    return corpus.algebra("qui1")


@pytest.fixture(scope="session")
def jablan3(corpus):
    return corpus.algebra("jablan3")


@pytest.fixture(scope="session")
def inout8(corpus):
    return corpus.algebra("inout8")


@pytest.fixture(scope="session")
def trefoil(corpus):
    return corpus.diagram("3_1")


@pytest.fixture(scope="session")
def bouquet(corpus):
    return corpus.diagram("1l1")


@pytest.fixture
def unknot():
    return parse_diagram("()")
