import pytest

from pinspect.harness import DEFAULT
from pinspect.simulation import REFERENCE_WEIBULL_SPECS


@pytest.fixture(scope="session")
def master_seed(pytestconfig):
    return pytestconfig.getoption("seed")


@pytest.fixture(scope="session")
def reference_specs():
    return {spec.label: spec for spec in REFERENCE_WEIBULL_SPECS}


@pytest.fixture(scope="session")
def experiment_config(master_seed):
    return DEFAULT.override(master_seed=master_seed)
