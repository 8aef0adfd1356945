import os

import allure
import numpy
import pytest
import scipy

from core.constants.application_constants import ApplicationConstants
from core.utils.config_reader import ConfigReader


@pytest.fixture(scope="session")
def config():
    """Load configuration for the test session"""
    return ConfigReader()


@pytest.fixture(scope="session", autouse=True)
def setup_allure_environment():
    """Setup Allure environment properties"""
    allure_results_dir = "reports/allure/allure-results"
    os.makedirs(allure_results_dir, exist_ok=True)

    env_props = f"{allure_results_dir}/environment.properties"
    with open(env_props, 'w') as f:
        f.write(f"Environment={ApplicationConstants.ENVIRONMENT}\n")
        f.write(f"Application={ApplicationConstants.APPLICATION_NAME} {ApplicationConstants.VERSION}\n")
        f.write(f"NumPy={numpy.__version__}\n")
        f.write(f"SciPy={scipy.__version__}\n")


def pytest_configure(config):
    """Configure pytest with custom options"""
    config.addinivalue_line("markers", "smoke: mark test as smoke test")
    config.addinivalue_line("markers", "regression: mark test as regression test")
    config.addinivalue_line("markers", "unit: mark test as unit test")
    config.addinivalue_line("markers", "property: mark test as property-based check")
    config.addinivalue_line("markers", "integration: mark test as integration test")
    config.addinivalue_line("markers", "slow: mark test as slow running")

    for directory in ["reports/pytest", "reports/allure/allure-results", "logs"]:
        os.makedirs(directory, exist_ok=True)


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    """Add suite and speed labels to Allure"""
    allure.dynamic.label("suite", item.parent.name)
    if item.get_closest_marker("slow"):
        allure.dynamic.tag("slow")
