import warnings
from functools import lru_cache

import pytest

from fatbundles import build_root_system, compact_real_form


@lru_cache(maxsize=None)
def algebra(family, rank, sign=1):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return compact_real_form(build_root_system(family, rank), sign)


@pytest.fixture(scope="session")
def get_algebra():
    return algebra


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[k])
