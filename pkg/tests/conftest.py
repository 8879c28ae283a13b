import pytest

from blockfec import FiniteField


@pytest.fixture(scope="session")
def gf2():
    return FiniteField(2)


@pytest.fixture(scope="session")
def gf8():
    return FiniteField(2, 3, (1, 1, 0, 1))


@pytest.fixture(scope="session")
def gf16():
    return FiniteField(2, 4, (1, 1, 0, 0, 1))


@pytest.fixture(scope="session")
def gf9():
    return FiniteField(3, 2, (2, 1, 1))


@pytest.fixture(scope="session")
def gf11():
    return FiniteField(11)


def bits(s: str):
    return tuple(int(c) for c in s if c in "01")
