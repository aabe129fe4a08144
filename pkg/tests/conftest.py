import pytest

from qhopf import build_params, proposition1_params


@pytest.fixture
def prop1_params():
    # xi = 0.6, gamma1 = 0.8, k = 0: gamma = 0.8 + i pi/1.2
    return proposition1_params(0.6, 0.8, 0, 1.0)


@pytest.fixture
def generic_params():
    return build_params(0.5, 0.1, 0.7, 1.0)


@pytest.fixture
def generic_complex_params():
    return build_params(0.3 + 0.2j, -0.1 + 0.05j, 0.9 - 0.4j, 1.5 + 0.3j)


@pytest.fixture
def degenerate_params():
    return build_params(0.3, 0.3, 0.7, 1.0)


@pytest.fixture
def gamma_zero_params():
    return build_params(0.5, 0.1, 0.0, 1.0)
