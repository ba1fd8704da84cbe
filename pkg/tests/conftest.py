import pytest

from ncg.field import GF


@pytest.fixture(scope="session")
def f2():
    return GF(2)


@pytest.fixture(scope="session")
def f3():
    return GF(3)


@pytest.fixture(scope="session")
def f4():
    return GF(2, 2)


@pytest.fixture(scope="session")
def f5():
    return GF(5)


@pytest.fixture(scope="session")
def f8():
    return GF(2, 3)


@pytest.fixture(scope="session")
def f9():
    return GF(3, 2)
