import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from curvecolor import _backend

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("repo", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@pytest.fixture(params=_backend.available())
def backend(request):
    """Run a test once per available kernel backend."""
    before = _backend.current()
    _backend.set_backend(request.param)
    yield request.param
    _backend.set_backend(before)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.VERDICTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(test_acceptance.VERDICTS):
            terminalreporter.write_line(test_acceptance.VERDICTS[number])
