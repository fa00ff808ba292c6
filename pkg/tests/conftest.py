"""Shared fixtures: the small-graph suite and a one-time kernel warmup."""

import pytest

from strongorient import kernels
from strongorient.generators import (
    barbell,
    complete,
    cycle,
    lollipop,
    path,
    random_regular,
)

SUITE_BUILDERS = {
    "k3": lambda: complete(3),
    "k4": lambda: complete(4),
    "k5": lambda: complete(5),
    "c4": lambda: cycle(4),
    "c5": lambda: cycle(5),
    "c6": lambda: cycle(6),
    "path5": lambda: path(5),
    "barbell6": lambda: barbell(6),
    "lollipop5": lambda: lollipop(5),
    "reg8_3": lambda: random_regular(8, 3, seed=11),
}

SUITE = {name: build() for name, build in SUITE_BUILDERS.items()}


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile (or load from cache) every jitted kernel before timing anything
    kernels.warmup()


@pytest.fixture
def suite():
    return dict(SUITE)


def suite_params():
    return [pytest.param(g, id=name) for name, g in SUITE.items()]
