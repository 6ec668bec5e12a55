import pytest

from fatcat import (
    cyclic,
    direct_sum_monoidal,
    group_as_groupoid,
    matrix_groupoid,
    symmetric,
    unitor_toy_monoidal,
)


@pytest.fixture(scope="session")
def z2():
    return group_as_groupoid(cyclic(2))


@pytest.fixture(scope="session")
def z3():
    return group_as_groupoid(cyclic(3))


@pytest.fixture(scope="session")
def z4():
    return group_as_groupoid(cyclic(4))


@pytest.fixture(scope="session")
def s3():
    return group_as_groupoid(symmetric(3))


@pytest.fixture(scope="session")
def gl2f2():
    return matrix_groupoid(2, 2, 2)


@pytest.fixture(scope="session")
def dsum2():
    return direct_sum_monoidal(2, 2)


@pytest.fixture(scope="session")
def toy_unitor():
    return unitor_toy_monoidal(4, 1)
