"""Signature scheme with a product-only signature ``(P, P⊗X⊗U, P⊗Y⊗V, N)``.

Verification runs five gates in order and stops at the first failure:

* ``V1`` the hash polynomial matches the message,
* ``V2`` ``deg A = deg B = 3d`` and ``deg N = 2d`` (malformed input lands here),
* ``V3`` neither ``A`` nor ``B`` is a constant multiple of ``P⊗M`` or ``P⊗N``,
* ``V4`` ``A, B`` have coefficients in ``[0, 3r]`` and ``N`` in ``[0, 2r]``,
* ``V5`` ``A ⊗ B = P ⊗ P ⊗ M ⊗ N``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .encoding import message_to_poly
from .keygen import KeyPair, Params, PublicKey, generate_ephemeral, make_rng
from .semiring import TropicalPoly, is_constant_multiple, otimes

MAX_SIGN_ATTEMPTS = 1024


class SigningError(RuntimeError):
    """The signer could not produce a self-consistent signature."""


@dataclass(frozen=True)
class VerifyOutcome:
    accepted: bool
    failed_gate: Optional[str] = None
    detail: str = ""

    def __post_init__(self):
        if self.accepted != (self.failed_gate is None):
            raise ValueError("accepted outcomes carry no gate, rejections always do")

    def __bool__(self) -> bool:
        return self.accepted

    @classmethod
    def ok(cls) -> "VerifyOutcome":
        return cls(True, None, "accepted")

    @classmethod
    def reject(cls, gate: str, detail: str) -> "VerifyOutcome":
        return cls(False, gate, detail)


@dataclass(frozen=True)
class SignatureV1:
    P: TropicalPoly
    A: TropicalPoly
    B: TropicalPoly
    N: TropicalPoly

    LABELS = ("P", "A", "B", "N")

    def components(self) -> tuple[TropicalPoly, ...]:
        return (self.P, self.A, self.B, self.N)


def check_shape(named: dict, expected: dict) -> Optional[str]:
    """Return a reason string if any component is malformed or has the wrong degree."""
    for name, poly in named.items():
        if not isinstance(poly, TropicalPoly):
            return f"{name} is not a tropical polynomial"
        if poly.is_eps:
            return f"{name} is the ε-polynomial (format)"
        if not poly.all_finite:
            return f"{name} has an absent (EPS) coefficient (format)"
        if poly.degree != expected[name]:
            return f"deg {name} = {poly.degree}, expected {expected[name]}"
    return None


def _gates_2_to_4(sig: SignatureV1, PM: TropicalPoly, params: Params) -> Optional[VerifyOutcome]:
    d, r = params.d, params.r
    reason = check_shape({"A": sig.A, "B": sig.B, "N": sig.N},
                         {"A": 3 * d, "B": 3 * d, "N": 2 * d})
    if reason:
        return VerifyOutcome.reject("V2", reason)
    PN = otimes(sig.P, sig.N)
    for name in ("A", "B"):
        comp = getattr(sig, name)
        for ref_name, ref in (("P⊗M", PM), ("P⊗N", PN)):
            if is_constant_multiple(comp, ref):
                return VerifyOutcome.reject("V3", f"{name} is a constant multiple of {ref_name}")
    if not sig.A.in_range(0, 3 * r) or not sig.B.in_range(0, 3 * r):
        return VerifyOutcome.reject("V4", f"A or B has a coefficient outside [0, {3 * r}]")
    if not sig.N.in_range(0, 2 * r):
        return VerifyOutcome.reject("V4", f"N has a coefficient outside [0, {2 * r}]")
    return None


def sign_v1(message: bytes, key: KeyPair, rng: random.Random | None = None) -> SignatureV1:
    params = key.params
    rng = rng if rng is not None else make_rng()
    P = message_to_poly(message, params.d, params.r)
    PX, PY = otimes(P, key.X), otimes(P, key.Y)
    PM = otimes(P, key.M)
    for _ in range(MAX_SIGN_ATTEMPTS):
        eph = generate_ephemeral(key.degrees, params, rng)
        sig = SignatureV1(P, otimes(PX, eph.U), otimes(PY, eph.V), eph.N)
        if _gates_2_to_4(sig, PM, params) is None:
            return sig
    raise SigningError(f"no valid ephemeral pair after {MAX_SIGN_ATTEMPTS} attempts")


def verify_v1(message: bytes, sig: SignatureV1, public: PublicKey) -> VerifyOutcome:
    params = public.params
    P = message_to_poly(message, params.d, params.r)
    if not isinstance(sig.P, TropicalPoly) or sig.P != P:
        return VerifyOutcome.reject("V1", "P is not the hash polynomial of the message")
    failed = _gates_2_to_4(sig, otimes(P, public.M), params)
    if failed is not None:
        return failed
    if otimes(sig.A, sig.B) != otimes(otimes(P, P), otimes(public.M, sig.N)):
        return VerifyOutcome.reject("V5", "A ⊗ B differs from P ⊗ P ⊗ M ⊗ N")
    return VerifyOutcome.ok()
