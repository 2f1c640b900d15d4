import functools
import importlib.util
import pathlib
import sys

import pytest

from tridend.omega import OmegaTable, builtin, left_projection

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "tests" / "data"


@functools.lru_cache(maxsize=None)
def _catalogue_module():
    spec = importlib.util.spec_from_file_location("ets_catalogue", ROOT / "scripts" / "ets_catalogue.py")
    mod = importlib.util.module_from_spec(spec)
    sys.modules[spec.name] = mod
    spec.loader.exec_module(mod)
    return mod


@functools.lru_cache(maxsize=None)
def ets_tables(n: int = 2) -> tuple:
    """Every ETS table on n elements, from the layered search script."""
    return tuple(_catalogue_module().enumerate_ets(n)["ets"])


def all_left(n: int = 2) -> OmegaTable:
    L = left_projection(n)
    return OmegaTable(n, L, L, L, L, L, L)


Z2_ADD = ((0, 1), (1, 0))
RIGHT_ZERO = ((0, 1), (0, 1))


def family_commutative() -> OmegaTable:
    """Commutative ETS on two elements: aux = Z/2 addition, constant star."""
    return builtin("family", 2, aux=Z2_ADD, star="constant")


def family_right_zero() -> OmegaTable:
    """Non-commutative family table: aux = right-zero semigroup, constant star."""
    return builtin("family", 2, aux=RIGHT_ZERO, star="constant")


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def ets2():
    return ets_tables(2)


# acceptance result lines, printed in the terminal summary so they survive output capture
ACCEPTANCE: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
