import random

import pytest
from hypothesis import settings

from latpoly.geometry import convex_hull, lattice_points_in_hull, make_polygon

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# Lines reported by the acceptance module, echoed in the terminal summary.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_polygon(rng, box=4, n=None):
    """Closed lattice polygon from the hull of a few random points in a box."""
    while True:
        k = n or rng.randint(3, 7)
        pts = [(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(k)]
        try:
            hull = convex_hull(pts)
        except ValueError:
            continue
        return make_polygon(lattice_points_in_hull(hull))


@pytest.fixture
def rng():
    return random.Random(20240601)


UNIT_TRIANGLE = [(0, 0), (1, 0), (0, 1)]
B2_POINTS = [(x, y) for x in range(-2, 3) for y in range(-2, 3) if x * x + y * y <= 4]
