"""Shared fixtures: small-dimension SICs and their derived tensors."""

import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from siclie.adjoint import adjoint_bundle
from siclie.config import BUNDLED_DATA_DIR
from siclie.sic import fiducial_search, load_fiducial, sic_from_fiducial
from siclie.tensors import triple_products

settings.register_profile(
    "fast",
    settings(
        max_examples=25,
        deadline=None,
        suppress_health_check=[HealthCheck.too_slow],
    ),
)
settings.register_profile("thorough", settings(max_examples=500, deadline=None))
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "fast"))


@pytest.fixture(scope="session")
def fid2():
    return load_fiducial(BUNDLED_DATA_DIR / "d2.txt")


@pytest.fixture(scope="session")
def fid3():
    return load_fiducial(BUNDLED_DATA_DIR / "d3.txt")


@pytest.fixture(scope="session")
def fid4():
    return fiducial_search(4, seed=42)


@pytest.fixture(scope="session")
def sic2(fid2):
    return sic_from_fiducial(fid2)


@pytest.fixture(scope="session")
def sic3(fid3):
    return sic_from_fiducial(fid3)


@pytest.fixture(scope="session")
def sic4(fid4):
    return sic_from_fiducial(fid4)


@pytest.fixture(scope="session")
def trip2(sic2):
    return triple_products(sic2)


@pytest.fixture(scope="session")
def trip3(sic3):
    return triple_products(sic3)


@pytest.fixture(scope="session")
def bundle2(trip2):
    return adjoint_bundle(trip2)


@pytest.fixture(scope="session")
def bundle3(trip3):
    return adjoint_bundle(trip3)


@pytest.fixture(scope="session")
def bundle4(sic4):
    return adjoint_bundle(triple_products(sic4))


@pytest.fixture(params=[2, 3], ids=["d2", "d3"])
def small_sic(request, sic2, sic3):
    return {2: sic2, 3: sic3}[request.param]


@pytest.fixture(params=[2, 3], ids=["d2", "d3"])
def small_bundle(request, bundle2, bundle3):
    return {2: bundle2, 3: bundle3}[request.param]


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
