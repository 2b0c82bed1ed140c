"""Shared fixtures: reference mirrors, molecules, and tolerances."""

import numpy as np
import pytest

from cavitycp import (ConstantLossy, Drude, HalfSpace, LIH,
                      ThermalEnvironment, Vacuum)
from cavitycp.quadrature import QuadratureSpec

GOLD_DRUDE = Drude(plasma_frequency=1.37e16, damping=5.32e13)
SAPPHIRE_300K = ConstantLossy(eps_real=10.0, eps_imag=1e-4)
SAPPHIRE_77K = ConstantLossy(eps_real=10.0, eps_imag=1e-6)


@pytest.fixture(scope="session")
def gold():
    return HalfSpace(GOLD_DRUDE)


@pytest.fixture(scope="session")
def env300():
    return ThermalEnvironment(300.0)


@pytest.fixture(scope="session")
def env77():
    return ThermalEnvironment(77.0)


@pytest.fixture(scope="session")
def quad():
    return QuadratureSpec()


@pytest.fixture(scope="session")
def quad_fast():
    return QuadratureSpec(rel_tol=1e-7)


@pytest.fixture()
def rng():
    return np.random.default_rng(20260825)
