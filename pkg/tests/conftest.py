import numpy as np
import pytest

from betrans.numgrid import make_grid
from betrans.testfuncs import suite_on_grid


@pytest.fixture(scope="session")
def grid_main():
    return make_grid(512)


@pytest.fixture(scope="session")
def grid_fine():
    return make_grid(1024)


@pytest.fixture(scope="session")
def bump(grid_main):
    return suite_on_grid("bump12", grid_main)


@pytest.fixture(scope="session")
def x2gauss(grid_main):
    return suite_on_grid("x2gauss", grid_main)


@pytest.fixture(scope="session")
def xexp(grid_main):
    return suite_on_grid("xexp", grid_main)
