import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tropsig.keygen import Params, generate_keypair  # noqa: E402
from tropsig.semiring import EPS, TropicalPoly  # noqa: E402


def random_coeffs(rng, max_deg=20, lo=-100, hi=100, eps_rate=0.15, finite_only=False):
    n = rng.randint(1, max_deg + 1)
    coeffs = [EPS if (not finite_only and rng.random() < eps_rate) else rng.randint(lo, hi)
              for _ in range(n)]
    if rng.random() < 0.02 and not finite_only:
        return []
    return coeffs


def random_tpoly(rng, **kw) -> TropicalPoly:
    return TropicalPoly(random_coeffs(rng, **kw))


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture(scope="session")
def key150():
    return generate_keypair(Params(), random.Random(150))


@pytest.fixture(scope="session")
def key150_v2():
    return generate_keypair(Params(scheme=2), random.Random(1502))
