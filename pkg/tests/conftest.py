import os
import sys

import pytest
from hypothesis import HealthCheck, settings

from nihospec.field import build_field

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def F4():
    return build_field(2, 1)


@pytest.fixture(scope="session")
def F16():
    return build_field(2, 2)


@pytest.fixture(scope="session")
def F64():
    return build_field(2, 3)


@pytest.fixture(scope="session")
def F256():
    return build_field(2, 4)


@pytest.fixture(scope="session")
def F9():
    return build_field(3, 1)


@pytest.fixture(scope="session")
def F81():
    return build_field(3, 2)


@pytest.fixture(scope="session")
def F25():
    return build_field(5, 1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
