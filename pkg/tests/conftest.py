import random

from plucker.lattice import LatticePolygon

# filled by the acceptance suite, echoed after the test run
acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.line(line)


def random_polygon(
    rng: random.Random, box: int = 10, max_points: int = 8
) -> LatticePolygon:
    """A 2-dimensional lattice polygon with vertices in [0, box]^2."""
    while True:
        n = rng.randint(3, max_points)
        pts = [(rng.randint(0, box), rng.randint(0, box)) for _ in range(n)]
        P = LatticePolygon.hull(pts)
        if P.dim == 2:
            return P
