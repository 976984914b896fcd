"""Tropical (min-plus) polynomial digital signatures.

The public surface re-exports the semiring arithmetic, the two signature
schemes, key generation and the file codecs; attack experiments live in
:mod:`tropsig.cryptanalysis` and timing in :mod:`tropsig.bench`.
"""

from .encoding import HashDigest, digest_to_poly, hash_message, message_to_poly, poly_square_to_2d
from .keygen import EphemeralPair, KeyPair, Params, PublicKey, generate_ephemeral, generate_keypair, make_rng
from .scheme_one import SignatureV1, SigningError, VerifyOutcome, sign_v1, verify_v1
from .scheme_two import SignatureV2, sign_v2, verify_v2
from .semiring import (EPS, ArithmeticRangeError, NoDegreeError, TropicalPoly, degree,
                       is_constant_multiple, oplus, otimes, residual_quotient, scalar_otimes)

__version__ = "0.1.0"

__all__ = [
    "EPS", "ArithmeticRangeError", "NoDegreeError", "TropicalPoly", "degree",
    "is_constant_multiple", "oplus", "otimes", "residual_quotient", "scalar_otimes",
    "HashDigest", "digest_to_poly", "hash_message", "message_to_poly", "poly_square_to_2d",
    "EphemeralPair", "KeyPair", "Params", "PublicKey", "generate_ephemeral",
    "generate_keypair", "make_rng",
    "SignatureV1", "SigningError", "VerifyOutcome", "sign_v1", "verify_v1",
    "SignatureV2", "sign_v2", "verify_v2",
]
