import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow",
                     action="store_true",
                     default=False,
                     help="Also run the slow Monte Carlo tests")
    parser.addoption("--seed",
                     action="store",
                     type=int,
                     default=0,
                     help="Master seed of the Monte Carlo tests")


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "slow: Monte Carlo test, only run with --runslow",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
