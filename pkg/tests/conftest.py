from functools import lru_cache

import pytest

from catalog import builtin_program, list_builtins
from construction import elaborate_with_workspace, execute


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", default=False,
                     help="Rewrite the files under tests/golden/ from the current build.")


@pytest.fixture
def update_golden(request) -> bool:
    return request.config.getoption("--update-golden")


@lru_cache(maxsize=None)
def executed(name: str):
    return execute(builtin_program(name))


@lru_cache(maxsize=None)
def elaborated(name: str):
    return elaborate_with_workspace(builtin_program(name))


BUILTINS = list_builtins()
