import random
from pathlib import Path

import pytest

from arcsys.arcs import Itinerary, canonicalize, is_essential
from arcsys.surface import parse_gluing

GOLDEN = Path(__file__).parent / "golden"
SURFACES = ["aAbB", "abAB", "aAbBcC"]

# lines reported by tests/test_acceptance.py, printed after the run
ACCEPTANCE: dict = {}


def random_word(g, rng: random.Random, max_len: int) -> str:
    out = ""
    for _ in range(rng.randint(0, max_len)):
        c = rng.choice(g.word)
        while out and out[-1] == c.swapcase():
            c = rng.choice(g.word)
        out += c
    return out


def random_arc(g, rng: random.Random, max_len: int = 5):
    """A random essential canonical arc with at most ``max_len`` crossings."""
    while True:
        raw = Itinerary(rng.randrange(g.sides), random_word(g, rng, max_len), rng.randrange(g.sides))
        a = canonicalize(raw, g)
        if is_essential(a):
            return a


@pytest.fixture(params=SURFACES)
def surface(request):
    return parse_gluing(request.param)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
