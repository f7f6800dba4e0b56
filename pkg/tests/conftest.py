import pytest

from polybox import GF


@pytest.fixture(scope="session")
def F2():
    return GF(2)


@pytest.fixture(scope="session")
def F3():
    return GF(3)


@pytest.fixture(scope="session")
def F4():
    return GF(4)


@pytest.fixture(scope="session")
def F5():
    return GF(5)


@pytest.fixture(scope="session")
def F9():
    return GF(9)
