import random
from pathlib import Path

import pytest
from hypothesis import settings

import projknot
from projknot.random_diagrams import random_diagram

DATA = Path(projknot.__file__).parent / "data"
FIXTURES = ["line", "affine_unknot", "two_lines", "k2_1", "k5_2", "k5_9"]
RANDOM_COUNT = 1000

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def fixture_path(name):
    return DATA / f"{name}.pld"


def load(name):
    return projknot.load_pld(fixture_path(name))


_corpus = None


def random_corpus():
    """1000 seeded random diagrams with at most 8 crossings, built once per session."""
    global _corpus
    if _corpus is None:
        rng = random.Random(20261016)
        _corpus = [random_diagram(rng, max_crossings=8, min_crossings=i % 7, max_waypoints=3)
                   for i in range(RANDOM_COUNT)]
    return _corpus


def all_diagrams():
    return [load(n) for n in FIXTURES] + random_corpus()


@pytest.fixture(params=FIXTURES)
def fixture_diagram(request):
    return request.param, load(request.param)
