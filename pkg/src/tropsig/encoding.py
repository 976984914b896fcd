"""Deterministic hash-to-polynomial encoding.

The SHA3-512 digest of a message is repeated as many times as needed, cut
left to right into ``b``-bit blocks (``r = 2**b - 1``), and block ``j`` becomes
the coefficient of ``x^⊗j`` for ``j = 0..d``. Bits are read most significant
first within each byte.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .semiring import TropicalPoly, otimes

DIGEST_BYTES = 64
DIGEST_BITS = 8 * DIGEST_BYTES


class UnsupportedParameterError(ValueError):
    pass


@dataclass(frozen=True)
class HashDigest:
    """A 512-bit digest, stored as its 64 raw bytes."""

    data: bytes

    def __post_init__(self):
        if len(self.data) != DIGEST_BYTES:
            raise ValueError(f"digest must be {DIGEST_BYTES} bytes, got {len(self.data)}")

    @property
    def bits(self) -> str:
        return "".join(f"{byte:08b}" for byte in self.data)

    def hex(self) -> str:
        return self.data.hex()


def hash_message(message: bytes) -> HashDigest:
    return HashDigest(hashlib.sha3_512(bytes(message)).digest())


def block_bits(r: int) -> int:
    """Bits per coefficient for range ``[0, r]``; ``r`` must be ``2**b - 1``."""
    if r < 1 or (r + 1) & r:
        raise UnsupportedParameterError(f"r must be of the form 2**b - 1, got {r}")
    return r.bit_length()


def copies_needed(d: int, r: int) -> int:
    b = block_bits(r)
    return -(-(d + 1) * b // DIGEST_BITS)


def digest_to_poly(h: HashDigest, d: int, r: int) -> TropicalPoly:
    """Degree-``d`` polynomial with coefficients in ``[0, r]`` read off ``h``."""
    if d < 0:
        raise UnsupportedParameterError("degree must be non-negative")
    b = block_bits(r)
    stream = int.from_bytes(h.data * copies_needed(d, r), "big")
    total = DIGEST_BITS * copies_needed(d, r)
    coeffs = [(stream >> (total - (j + 1) * b)) & r for j in range(d + 1)]
    return TropicalPoly(coeffs)


def message_to_poly(message: bytes, d: int, r: int) -> TropicalPoly:
    return digest_to_poly(hash_message(message), d, r)


def poly_square_to_2d(p: TropicalPoly) -> TropicalPoly:
    """``p ⊗ p``: doubles the degree of a hash polynomial."""
    if p.is_eps:
        raise ValueError("cannot square the ε-polynomial")
    return otimes(p, p)
