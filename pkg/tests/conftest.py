import pathlib

import pytest

from gsi import constructors

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def n1():
    return constructors.numerical([3, 4, 5])


@pytest.fixture(scope="session")
def n2():
    return constructors.numerical([2, 3])


@pytest.fixture(scope="session")
def node2():
    return constructors.node(2)


@pytest.fixture(scope="session")
def node3():
    return constructors.node(3)


@pytest.fixture(scope="session")
def ex2():
    return constructors.from_small_elements(
        2, (0, 0), (5, 5), {(0, 0), (3, 3), (3, 4), (4, 3), (5, 5)})


@pytest.fixture(scope="session")
def prod22():
    n2 = constructors.numerical([2, 3])
    return constructors.product(n2, n2)


@pytest.fixture(scope="session")
def data_dir():
    return DATA
