import os

import pytest

from nilorbits.chevalley import DEFAULT_SEED

ACCEPTANCE_LINES: dict[int, str] = {}


def e6_enabled() -> bool:
    return os.environ.get("NILORBITS_E6", "") not in ("", "0")


@pytest.fixture(scope="session")
def seed():
    return DEFAULT_SEED


@pytest.fixture(autouse=True, scope="session")
def _isolated_cache(tmp_path_factory):
    # keep CLI tests away from the user's cache
    old = os.environ.get("ORBITS_CACHE_DIR")
    os.environ["ORBITS_CACHE_DIR"] = str(tmp_path_factory.mktemp("cache"))
    yield
    if old is None:
        os.environ.pop("ORBITS_CACHE_DIR", None)
    else:
        os.environ["ORBITS_CACHE_DIR"] = old


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
