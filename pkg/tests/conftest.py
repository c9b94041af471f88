import mpmath
import pytest

from planardyn import DEFAULT_TOLERANCES, make_context


@pytest.fixture(scope="session")
def ctx():
    return make_context()


@pytest.fixture(scope="session")
def fp():
    return mpmath.fp


@pytest.fixture(scope="session")
def tol():
    return DEFAULT_TOLERANCES
