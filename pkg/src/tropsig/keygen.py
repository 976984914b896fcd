"""Key and ephemeral polynomial generation.

All randomness comes from one injected ``random.Random``-compatible source.
The default is :class:`random.SystemRandom`; tests pass a seeded
``random.Random``. ``randrange`` is unbiased (rejection sampling on
``getrandbits``), so no modulo reduction happens here.
"""

from __future__ import annotations

import random
import secrets
from dataclasses import dataclass, field

from .encoding import block_bits
from .semiring import TropicalPoly, otimes

SCHEMES = (1, 2)
HASH_MODES = ("d", "2d")


@dataclass(frozen=True)
class Params:
    """Scheme parameters.

    ``hash_mode`` only matters for scheme 2: ``"d"`` hashes to a degree-d
    polynomial (the default), ``"2d"`` squares it to degree 2d.
    """

    d: int = 150
    r: int = 127
    scheme: int = 1
    hash_mode: str = "d"

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 4:
            raise ValueError(f"d must be an integer >= 4, got {self.d!r}")
        if not isinstance(self.r, int):
            raise ValueError(f"r must be an integer, got {self.r!r}")
        block_bits(self.r)
        if self.scheme not in SCHEMES:
            raise ValueError(f"scheme must be 1 or 2, got {self.scheme!r}")
        if self.hash_mode not in HASH_MODES:
            raise ValueError(f"hash_mode must be 'd' or '2d', got {self.hash_mode!r}")

    @property
    def x_degree_range(self) -> tuple[int, int]:
        """Inclusive bounds ``[ceil(3d/4), floor(5d/4)]`` for ``deg X``."""
        return -(-3 * self.d // 4), 5 * self.d // 4


@dataclass(frozen=True)
class PublicKey:
    M: TropicalPoly
    params: Params


@dataclass(frozen=True)
class KeyPair:
    X: TropicalPoly
    Y: TropicalPoly
    M: TropicalPoly
    params: Params

    @property
    def public(self) -> PublicKey:
        return PublicKey(self.M, self.params)

    @property
    def degrees(self) -> tuple[int, int]:
        return self.X.degree, self.Y.degree


@dataclass(frozen=True)
class EphemeralPair:
    U: TropicalPoly
    V: TropicalPoly
    N: TropicalPoly = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "N", otimes(self.U, self.V))


def make_rng(seed=None) -> random.Random:
    """A seeded ``random.Random`` for tests, or the system CSPRNG when ``seed`` is None."""
    if seed is None:
        return random.SystemRandom()
    if isinstance(seed, random.Random):
        return seed
    if isinstance(seed, str):
        seed = bytes.fromhex(seed)
    return random.Random(seed)


def random_poly(deg: int, hi: int, rng: random.Random, lo: int = 0) -> TropicalPoly:
    """Degree-``deg`` polynomial with coefficients uniform in ``[lo, hi]``."""
    span = hi - lo + 1
    return TropicalPoly([lo + rng.randrange(span) for _ in range(deg + 1)])


def safe_poly(deg: int, r: int, rng: random.Random) -> TropicalPoly:
    """Uniform coefficients in ``[0, r]`` with the end coefficients forced to 0."""
    coeffs = [rng.randrange(r + 1) for _ in range(deg + 1)]
    coeffs[0] = coeffs[-1] = 0
    return TropicalPoly(coeffs)


def generate_keypair(params: Params, rng: random.Random | None = None) -> KeyPair:
    rng = rng if rng is not None else make_rng()
    lo, hi = params.x_degree_range
    dx = lo + rng.randrange(hi - lo + 1)
    dy = 2 * params.d - dx
    X = safe_poly(dx, params.r, rng)
    Y = safe_poly(dy, params.r, rng)
    return KeyPair(X, Y, otimes(X, Y), params)


def generate_ephemeral(degrees: tuple[int, int], params: Params,
                       rng: random.Random | None = None) -> EphemeralPair:
    """Sample ``U`` and ``V`` with ``deg U = deg Y`` and ``deg V = deg X``."""
    dx, dy = degrees
    if dx < 0 or dy < 0 or dx + dy != 2 * params.d:
        raise ValueError(f"degrees {degrees} do not sum to 2d = {2 * params.d}")
    rng = rng if rng is not None else make_rng()
    U = safe_poly(dy, params.r, rng)
    V = safe_poly(dx, params.r, rng)
    return EphemeralPair(U, V)
