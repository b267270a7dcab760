import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from clusterchar.clustercat import ArcCategory, ModuleCategory  # noqa: E402
from clusterchar.quiver import ExchangeQuiver  # noqa: E402


@lru_cache(maxsize=None)
def arc_category(n):
    return ArcCategory(n)


@lru_cache(maxsize=None)
def module_category(kind, n):
    from clusterchar.cli import quiver_for_type

    return ModuleCategory(quiver_for_type(f"{kind}{n}"))


@pytest.fixture
def pentagon():
    return arc_category(2)


@pytest.fixture
def hexagon():
    return arc_category(3)


@pytest.fixture
def a2():
    return ExchangeQuiver.linear_a(2)
