import pytest

from lmss.corpus import connected_graphs_upto


@pytest.fixture(scope="session")
def connected_upto_6():
    return connected_graphs_upto(6)


@pytest.fixture(scope="session")
def connected_upto_8():
    return connected_graphs_upto(8)
