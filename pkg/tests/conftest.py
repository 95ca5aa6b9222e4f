import math

import numpy as np
import pytest

from minkbertrand.bertrand import BertrandConfig
from minkbertrand.curve_dsl import Space, random_spherical_curve
from minkbertrand.spherical_frames import sabban_frame

N_RANDOM = 20
N_STEEP = 10  # of the N_RANDOM curves per space, this many have kappa_g^2 > 1 everywhere


def _draw(space, seed):
    rng = np.random.default_rng(seed)
    steep = [random_spherical_curve(rng, space, min_kg_sq=1.05) for _ in range(N_STEEP)]
    loose = [random_spherical_curve(rng, space) for _ in range(N_RANDOM - N_STEEP)]
    return steep, loose


@pytest.fixture(scope="session")
def s12_curves():
    """(steep, loose): unit-speed random curves on S^2_1."""
    return _draw(Space.S12, 1001)


@pytest.fixture(scope="session")
def h2_curves():
    return _draw(Space.H2, 2002)


def kg_range(curve, n=101):
    kgs = [sabban_frame(s, curve.space).kappa_g for s in curve.samples(curve.grid(n))]
    return min(kgs), max(kgs)


def safe_config(curve, a=1.3, xi=0.4):
    """A Bertrand configuration whose factor 1 - tanh(xi) kappa_g stays near or above 1.

    xi takes the sign opposite to kappa_g where kappa_g has one sign.
    """
    lo, hi = kg_range(curve)
    sign = -1.0 if lo > 0 else 1.0 if hi < 0 else 1.0
    return BertrandConfig(a, sign * abs(xi), curve.space)


def regular_u_range(curve, theta):
    """A u interval on which the constant slope surface over ``curve`` has no singular points.

    The surface is singular where 1 - tanh(xi(u)) kappa_g = 0; choosing u on the side
    where xi and kappa_g have opposite signs keeps the factor above 1.
    """
    lo, hi = kg_range(curve)
    slope = math.tanh(theta) if curve.space is Space.S12 else 1.0 / math.tanh(theta)
    if lo > 0:
        return (0.5, 1.0) if slope > 0 else (1.0, 2.0)
    if hi < 0:
        return (1.0, 2.0) if slope > 0 else (0.5, 1.0)
    return (0.9, 1.1)


# acceptance bookkeeping: one summary line per criterion at the end of the run

_ACCEPTANCE: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        n, title = marker.args
        _ACCEPTANCE[n] = [title, rep.passed, item.name]


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        title, ok, name = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}  ({name})")
