"""Signature scheme that blends tropical addition into the signature.

The signature is the 6-tuple ``(P, S2, S3, S4, N, E)`` with

    S2 = P ⊕ (X⊗U),  S3 = P ⊕ (Y⊗V),  S4 = P ⊗ [(X⊗U) ⊕ (Y⊗V)] ⊕ E,  N = U⊗V

and ``E`` a fresh random masking polynomial. The verifier never sees
``R = P ⊗ [(X⊗U) ⊕ (Y⊗V)]`` on its own; ``S4`` stands in for ``R ⊕ E`` in
both algebraic checks.

With ``hash_mode="d"`` (default) ``P`` has degree ``d``, so ``S4`` and ``E``
have degree ``3d``. With ``hash_mode="2d"`` ``P`` is the tropical square of
the degree-d encoding, and ``S4``/``E`` grow to degree ``4d`` with range
``[0, 4r]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .encoding import message_to_poly, poly_square_to_2d
from .keygen import KeyPair, Params, PublicKey, generate_ephemeral, make_rng, random_poly
from .scheme_one import MAX_SIGN_ATTEMPTS, SigningError, VerifyOutcome, check_shape
from .semiring import TropicalPoly, is_constant_multiple, oplus, otimes


@dataclass(frozen=True)
class SignatureV2:
    P: TropicalPoly
    S2: TropicalPoly
    S3: TropicalPoly
    S4: TropicalPoly
    N: TropicalPoly
    E: TropicalPoly

    LABELS = ("P", "S2", "S3", "S4", "N", "E")

    def components(self) -> tuple[TropicalPoly, ...]:
        return (self.P, self.S2, self.S3, self.S4, self.N, self.E)


def hash_poly(message: bytes, params: Params) -> TropicalPoly:
    P = message_to_poly(message, params.d, params.r)
    return poly_square_to_2d(P) if params.hash_mode == "2d" else P


def shape(params: Params) -> tuple[dict, dict]:
    """Expected degrees and upper coefficient bounds for each component."""
    d, r = params.d, params.r
    p_deg, p_max = (2 * d, 2 * r) if params.hash_mode == "2d" else (d, r)
    degrees = {"S2": 2 * d, "S3": 2 * d, "N": 2 * d, "S4": p_deg + 2 * d, "E": p_deg + 2 * d}
    bounds = {"S2": 2 * r, "S3": 2 * r, "N": 2 * r, "S4": p_max + 2 * r, "E": p_max + 2 * r}
    return degrees, bounds


def _gates_2_to_4(sig: SignatureV2, public_M: TropicalPoly,
                  params: Params) -> Optional[VerifyOutcome]:
    degrees, bounds = shape(params)
    reason = check_shape({k: getattr(sig, k) for k in degrees}, degrees)
    if reason:
        return VerifyOutcome.reject("V'2", reason)
    for name, hi in bounds.items():
        if not getattr(sig, name).in_range(0, hi):
            return VerifyOutcome.reject("V'3", f"{name} has a coefficient outside [0, {hi}]")
    refs = (("P⊕M", oplus(sig.P, public_M)), ("P⊕N", oplus(sig.P, sig.N)))
    for name in ("S2", "S3"):
        comp = getattr(sig, name)
        for ref_name, ref in refs:
            if is_constant_multiple(comp, ref):
                return VerifyOutcome.reject("V'4", f"{name} is a constant multiple of {ref_name}")
    return None


def sign_v2(message: bytes, key: KeyPair, rng: random.Random | None = None) -> SignatureV2:
    params = key.params
    rng = rng if rng is not None else make_rng()
    P = hash_poly(message, params)
    degrees, bounds = shape(params)
    for _ in range(MAX_SIGN_ATTEMPTS):
        eph = generate_ephemeral(key.degrees, params, rng)
        XU, YV = otimes(key.X, eph.U), otimes(key.Y, eph.V)
        E = random_poly(degrees["E"], bounds["E"], rng)
        S4 = oplus(otimes(P, oplus(XU, YV)), E)
        sig = SignatureV2(P, oplus(P, XU), oplus(P, YV), S4, eph.N, E)
        if _gates_2_to_4(sig, key.M, params) is None:
            return sig
    raise SigningError(f"no valid ephemeral pair after {MAX_SIGN_ATTEMPTS} attempts")


def verify_v2(message: bytes, sig: SignatureV2, public: PublicKey) -> VerifyOutcome:
    params = public.params
    P = hash_poly(message, params)
    if not isinstance(sig.P, TropicalPoly) or sig.P != P:
        return VerifyOutcome.reject("V'1", "P is not the hash polynomial of the message")
    failed = _gates_2_to_4(sig, public.M, params)
    if failed is not None:
        return failed
    PP_S4 = oplus(otimes(P, P), sig.S4)
    if oplus(otimes(P, oplus(sig.S2, sig.S3)), sig.E) != PP_S4:
        return VerifyOutcome.reject("V'5", "P ⊗ (S2 ⊕ S3) ⊕ E differs from (P ⊗ P) ⊕ S4")
    if oplus(otimes(sig.S2, sig.S3), sig.E) != oplus(PP_S4, otimes(public.M, sig.N)):
        return VerifyOutcome.reject("V'6", "(S2 ⊗ S3) ⊕ E differs from (P ⊗ P) ⊕ S4 ⊕ (M ⊗ N)")
    return VerifyOutcome.ok()
