import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from isgcoh import fixtures  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# acceptance lines collected by test_acceptance and echoed after the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])


@pytest.fixture(scope="session")
def z2_mod():
    return fixtures.z2_module()


@pytest.fixture(scope="session")
def chain_mod():
    return fixtures.two_chain_module()


@pytest.fixture(scope="session")
def z2_chain_mod():
    return fixtures.z2_chain_module()


@pytest.fixture(scope="session", params=["z2", "two_chain", "z2_chain"])
def any_mod(request):
    return {"z2": fixtures.z2_module, "two_chain": fixtures.two_chain_module,
            "z2_chain": fixtures.z2_chain_module}[request.param]()
