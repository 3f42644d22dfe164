import pytest

from genplanar.catalog import corpus_up_to_15, group_from_spec


@pytest.fixture(scope="session")
def corpus():
    return corpus_up_to_15()


@pytest.fixture(scope="session")
def by_name(corpus):
    return {g.name: g for g in corpus}


@pytest.fixture(scope="session")
def s5():
    return group_from_spec("S:5")


@pytest.fixture(scope="session")
def a5():
    return group_from_spec("A:5")
