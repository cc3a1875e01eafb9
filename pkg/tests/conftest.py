import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from plstack import SimplicialComplex, simplex  # noqa: E402
from plstack.cobordism import attach_pyramid, random_boundary_face  # noqa: E402
from plstack.complex import fresh_vertex  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pyramid_corpus(n_pairs, seed=0, dims=(2, 3, 4, 5), max_steps=4):
    """(S, F) pairs: S grown from a simplex by random pyramids, F a boundary face of S."""
    rng = random.Random(seed)
    out = []
    for i in range(n_pairs):
        d = dims[i % len(dims)]
        S = simplex(range(d + 1))
        for _ in range(rng.randrange(max_steps + 1)):
            F = random_boundary_face(S, rng)
            S, _ = attach_pyramid(S, F, fresh_vertex(S))
        out.append((S, random_boundary_face(S, rng)))
    return out


def random_complex(rng, n_vertices=7, max_facets=6, max_size=4):
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(1, max_size)
        facets.append(rng.sample(range(n_vertices), size))
    return SimplicialComplex(facets)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
