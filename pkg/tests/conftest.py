import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from hibicx import build_hat, canonical, fixtures, kernels  # noqa: E402


def clear_caches():
    canonical._min_generators.cache_clear()
    canonical._mlen_extremes.cache_clear()
    canonical.is_level.cache_clear()
    canonical.is_anticanonical_level.cache_clear()


@pytest.fixture(params=[k.NAME for k in kernels.available_backends()])
def backend(request, monkeypatch):
    """Run a test once per available kernel backend."""
    mod = {k.NAME: k for k in kernels.available_backends()}[request.param]
    for fn in ("is_minimal", "enumerate_module", "least_split"):
        monkeypatch.setattr(kernels, fn, getattr(mod, fn))
    clear_caches()
    yield request.param
    clear_caches()


@pytest.fixture
def hat():
    return lambda name: build_hat(fixtures.load(name))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "VERDICTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.VERDICTS):
        terminalreporter.write_line(mod.VERDICTS[key])
