from pathlib import Path

import pytest
from click.testing import CliRunner

from orbimod.app import create_app
from orbimod.config import TestingConfig
from orbimod.models import LineVBundle, OrbifoldSurface, RankTwoVBundle

FIXTURES = Path(__file__).parent / 'fixtures'


def random_surface(rng, max_genus=3, max_points=4, max_alpha=7):
    alphas = tuple(rng.randint(2, max_alpha) for _ in range(rng.randint(1, max_points)))
    return OrbifoldSurface(rng.randint(0, max_genus), alphas)


def random_line(rng, surface):
    return LineVBundle(surface, rng.randint(-8, 8), tuple(rng.randrange(alpha) for alpha in surface.cone_orders))


def random_bundle(rng, surface):
    """Random bundle with at least one point of distinct isotropy"""
    while True:
        pairs = tuple(tuple(sorted((rng.randrange(alpha), rng.randrange(alpha)))) for alpha in surface.cone_orders)
        bundle = RankTwoVBundle(surface, pairs, rng.randint(-4, 4))
        if bundle.n_free:
            return bundle


def make_bundle(genus, alphas, pairs, l):
    return RankTwoVBundle(OrbifoldSurface(genus, tuple(alphas)), tuple(pairs), l)


@pytest.fixture
def settings():
    return TestingConfig


@pytest.fixture
def genus_one_bundle():
    """g = 1, one point of order 2, isotropy (0, 1), l = 0"""
    return make_bundle(1, (2,), ((0, 1),), 0)


@pytest.fixture
def quintic_bundle():
    return make_bundle(0, (5, 5, 5, 5), ((0, 1),) * 4, 1)


@pytest.fixture
def triangle_bundle():
    return make_bundle(0, (2, 3, 7), ((0, 1),) * 3, 1)


@pytest.fixture
def sextic_bundle():
    """Six points of order 2 on the sphere; admits reductions"""
    return make_bundle(0, (2,) * 6, ((0, 1),) * 6, 0)


@pytest.fixture
def app():
    return create_app('testing')


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def invoke(app, runner):
    def _invoke(*args, document=None):
        return runner.invoke(app, list(args), input=document)
    return _invoke


@pytest.fixture
def load_fixture():
    def _load(name):
        return (FIXTURES / name).read_text()
    return _load
