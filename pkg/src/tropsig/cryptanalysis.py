"""Desk-scale attack experiments.

* :func:`brute_force_factor` exhaustively factors tiny polynomials and is the
  ground-truth oracle for the factoring questions.
* :func:`division_attack_v1` divides the public hash polynomial out of a
  scheme-one signature and re-multiplies by a fresh hash.
* :func:`forgery_battery` runs a fixed set of forgery attempts against either
  scheme.

An attack succeeds only if the verifier accepts a message the honest signer
never signed. Every search has an explicit work limit; nothing here is meant
for production parameters.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .encoding import message_to_poly
from .keygen import Params, PublicKey, generate_keypair, make_rng, random_poly, safe_poly
from .scheme_one import SignatureV1, sign_v1, verify_v1
from .scheme_two import SignatureV2, hash_poly, shape, verify_v2
from .semiring import (TropicalPoly, oplus, otimes, residual_quotient,
                       scalar_otimes)

DEFAULT_WORK_LIMIT = 10**8
EQUIVALENCE = "(a, b) ~ (c⊗a, (-c)⊗b) ~ (b, a)"


class WorkLimitError(RuntimeError):
    """The requested search is larger than the configured work limit."""


@dataclass
class FactorSearchReport:
    target: TropicalPoly
    degree_split: tuple[int, int]
    coeff_bound: int
    factorizations: list
    search_space_size: int
    elapsed: float
    equivalence: str = EQUIVALENCE

    def __str__(self) -> str:
        lines = [f"target {self.target}",
                 f"split {self.degree_split}, coefficients in [0, {self.coeff_bound}], "
                 f"{self.search_space_size} candidate pairs, {self.elapsed:.3f}s",
                 f"{len(self.factorizations)} factorization(s) up to {self.equivalence}"]
        lines += [f"  ({a}) ⊗ ({b})" for a, b in self.factorizations]
        return "\n".join(lines)


@dataclass
class AttackReport:
    attack_name: str
    trials: int
    successes: int
    notes: str = ""
    gates: Counter = field(default_factory=Counter)

    def __post_init__(self):
        if not 0 <= self.successes <= self.trials:
            raise ValueError("successes must lie in [0, trials]")

    @property
    def rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    def row(self) -> str:
        return f"{self.attack_name},{self.trials},{self.successes}"

    def __str__(self) -> str:
        gates = ", ".join(f"{g}:{n}" for g, n in sorted(self.gates.items()))
        text = f"{self.attack_name}: {self.successes}/{self.trials} accepted"
        if gates:
            text += f" [rejections {gates}]"
        if self.notes:
            text += f" ({self.notes})"
        return text


# -- brute-force factoring ------------------------------------------------

def _shift_key(a: tuple, b: tuple) -> tuple:
    c = min(a)
    return tuple(x - c for x in a), tuple(y + c for y in b)


def canonical_pair(a: TropicalPoly, b: TropicalPoly) -> tuple:
    """Representative of the pair's class under constant shifts and swapping."""
    ka = _shift_key(a.coeffs, b.coeffs)
    kb = _shift_key(b.coeffs, a.coeffs)
    return min(ka, kb)


def _candidates(deg: int, bound: int) -> np.ndarray:
    rows = itertools.product(range(bound + 1), repeat=deg + 1)
    return np.array(list(rows), dtype=np.int64).reshape(-1, deg + 1)


def brute_force_factor(target: TropicalPoly, d1: int, d2: int, coeff_bound: int,
                       work_limit: int = DEFAULT_WORK_LIMIT) -> FactorSearchReport:
    """Every ``(a, b)`` with ``deg a = d1``, ``deg b = d2``, coefficients in
    ``[0, coeff_bound]`` and ``a ⊗ b = target``, deduplicated up to
    :data:`EQUIVALENCE`.
    """
    if target.is_eps or not target.all_finite:
        raise ValueError("target must be a polynomial with finite coefficients")
    if d1 < 0 or d2 < 0 or d1 + d2 != target.degree:
        raise ValueError(f"split ({d1}, {d2}) does not add up to deg target = {target.degree}")
    if coeff_bound < 0:
        raise ValueError("coeff_bound must be non-negative")
    base = coeff_bound + 1
    space = base ** (d1 + 1) * base ** (d2 + 1)
    if space > work_limit:
        raise WorkLimitError(f"{space} candidate pairs exceed the work limit {work_limit}")

    start = time.perf_counter()
    t = np.asarray(target.array)
    A, B = _candidates(d1, coeff_bound), _candidates(d2, coeff_bound)
    chunk = max(1, (1 << 22) // max(1, B.shape[0] * t.size))
    found: dict = {}
    for lo in range(0, A.shape[0], chunk):
        a = A[lo : lo + chunk]
        prod = np.full((a.shape[0], B.shape[0], t.size), np.iinfo(np.int64).max // 4)
        for i in range(d1 + 1):
            seg = prod[:, :, i : i + d2 + 1]
            np.minimum(seg, a[:, i, None, None] + B[None, :, :], out=seg)
        hits = np.argwhere((prod == t).all(axis=2))
        for ia, ib in hits:
            pa = TropicalPoly.from_array(a[ia])
            pb = TropicalPoly.from_array(B[ib])
            if otimes(pa, pb) != target:
                raise AssertionError("factor oracle returned a non-factorization")
            found.setdefault(canonical_pair(pa, pb), (pa, pb))
    return FactorSearchReport(target, (d1, d2), coeff_bound, list(found.values()),
                              space, time.perf_counter() - start)


def contains_pair(report: FactorSearchReport, a: TropicalPoly, b: TropicalPoly) -> bool:
    key = canonical_pair(a, b)
    return any(canonical_pair(x, y) == key for x, y in report.factorizations)


# -- division attack ------------------------------------------------------

def _division_forge(sig: SignatureV1, params: Params, fresh_message: bytes):
    QA = residual_quotient(sig.A, sig.P)
    QB = residual_quotient(sig.B, sig.P)
    exact = otimes(sig.P, QA) == sig.A and otimes(sig.P, QB) == sig.B
    P2 = message_to_poly(fresh_message, params.d, params.r)
    return SignatureV1(P2, otimes(P2, QA), otimes(P2, QB), sig.N), exact


def division_attack_v1(sig: SignatureV1, public: PublicKey,
                       fresh_message: bytes) -> AttackReport:
    """Strip ``P`` from ``A`` and ``B`` by residuation and re-sign ``fresh_message``."""
    forged, exact = _division_forge(sig, public.params, fresh_message)
    outcome = verify_v1(fresh_message, forged, public)
    gates = Counter() if outcome else Counter({outcome.failed_gate: 1})
    return AttackReport("division", 1, int(outcome.accepted),
                        notes=f"quotients exact: {exact}", gates=gates)


def run_division_attack(params: Params, trials: int, rng=None) -> AttackReport:
    """Repeat the division attack on fresh honest signatures under one key."""
    rng = make_rng(rng)
    key = generate_keypair(params, rng)
    report = AttackReport("division", trials, 0, gates=Counter())
    inexact = 0
    for i in range(trials):
        sig = sign_v1(b"signed/%d" % i, key, rng)
        fresh = b"fresh/%d" % i
        forged, exact = _division_forge(sig, params, fresh)
        inexact += not exact
        outcome = verify_v1(fresh, forged, key.public)
        if outcome:
            report.successes += 1
        else:
            report.gates[outcome.failed_gate] += 1
    report.notes = f"d={params.d} r={params.r}; inexact quotients: {inexact}"
    return report


# -- forgery battery ------------------------------------------------------

def _verify(public: PublicKey):
    return verify_v1 if public.params.scheme == 1 else verify_v2


def _attacker_N(params: Params, rng) -> TropicalPoly:
    # The attacker does not know deg X, so it splits 2d evenly.
    return otimes(safe_poly(params.d, params.r, rng), safe_poly(params.d, params.r, rng))


def _remark1_tuple(public: PublicKey, message: bytes, rng, c: int = 0):
    params, M = public.params, public.M
    N = _attacker_N(params, rng)
    if params.scheme == 1:
        P = message_to_poly(message, params.d, params.r)
        return SignatureV1(P, scalar_otimes(c, otimes(P, M)),
                           scalar_otimes(-c, otimes(P, N)), N)
    P = hash_poly(message, params)
    degrees, bounds = shape(params)
    E = random_poly(degrees["E"], bounds["E"], rng)
    S4 = oplus(otimes(P, oplus(M, N)), E)
    return SignatureV2(P, scalar_otimes(c, oplus(P, M)), scalar_otimes(-c, oplus(P, N)),
                       S4, N, E)


def _random_tuple(params: Params, message: bytes, rng):
    d, r = params.d, params.r
    if params.scheme == 1:
        P = message_to_poly(message, d, r)
        return SignatureV1(P, random_poly(3 * d, 3 * r, rng), random_poly(3 * d, 3 * r, rng),
                           random_poly(2 * d, 2 * r, rng))
    degrees, bounds = shape(params)
    parts = {k: random_poly(degrees[k], bounds[k], rng) for k in degrees}
    return SignatureV2(hash_poly(message, params), **parts)


def _scaled_honest(sig, c: int):
    if isinstance(sig, SignatureV1):
        return SignatureV1(sig.P, scalar_otimes(c, sig.A), scalar_otimes(-c, sig.B), sig.N)
    return SignatureV2(sig.P, scalar_otimes(c, sig.S2), scalar_otimes(-c, sig.S3),
                       sig.S4, sig.N, sig.E)


def forgery_battery(public: PublicKey, scheme: Optional[int] = None, trials: int = 100,
                    rng=None, signer: Optional[Callable] = None) -> list[AttackReport]:
    """Run the fixed forgery battery against ``public``.

    ``signer`` is a signing oracle ``message -> signature`` for the honest
    key; without it the replay and scaled-signature cases are skipped.
    """
    if scheme is not None and scheme != public.params.scheme:
        raise ValueError("scheme tag does not match the public key parameters")
    params = public.params
    rng = make_rng(rng)
    verify = _verify(public)
    r3 = 3 * params.r

    def run(name: str, make, signed: Optional[bytes] = None, notes: str = "") -> AttackReport:
        report = AttackReport(name, trials, 0, notes=notes, gates=Counter())
        for i in range(trials):
            message, forged = make(i)
            outcome = verify(message, forged, public)
            if outcome:
                report.successes += 1
            else:
                report.gates[outcome.failed_gate] += 1
        return report

    reports = [
        run("remark1", lambda i: (b"r1/%d" % i, _remark1_tuple(public, b"r1/%d" % i, rng))),
    ]

    def scaled(i):
        c = 0
        while c == 0:
            c = rng.randint(-r3, r3)
        return b"cm/%d" % i, _remark1_tuple(public, b"cm/%d" % i, rng, c)

    reports.append(run("constant_multiple", scaled))
    reports.append(run("random_tuple", lambda i: (b"rt/%d" % i, _random_tuple(params, b"rt/%d" % i, rng))))

    if signer is not None:
        reports.append(run("replay", lambda i: (b"replay-target/%d" % i, signer(b"replay-src/%d" % i))))

        # A rescaled honest signature on the *same* message is not a forgery;
        # report how often it is accepted and at which gate it dies otherwise.
        accepted_same = 0
        out_of_range_accepted = 0
        gates: Counter = Counter()
        for i in range(trials):
            m = b"scaled/%d" % i
            sig = signer(m)
            c = 0
            while c == 0:
                c = rng.randint(-r3, r3)
            tweaked = _scaled_honest(sig, c)
            outcome = verify(m, tweaked, public)
            in_range = all(p.in_range(0, hi) for p, hi in _range_view(tweaked, params))
            if outcome:
                accepted_same += 1
                out_of_range_accepted += not in_range
            else:
                gates[outcome.failed_gate] += 1
        reports.append(AttackReport(
            "scaled_honest", trials, 0, gates=gates,
            notes=f"same-message acceptances {accepted_same}; "
                  f"accepted while out of range {out_of_range_accepted}"))
    return reports


def _range_view(sig, params: Params):
    if isinstance(sig, SignatureV1):
        r = params.r
        return [(sig.A, 3 * r), (sig.B, 3 * r), (sig.N, 2 * r)]
    _, bounds = shape(params)
    return [(getattr(sig, k), hi) for k, hi in bounds.items()]


def key_space_log2(params: Params) -> float:
    """log2 of the raw (pre-zeroing) coefficient space of ``(X, Y)``."""
    return (2 * params.d + 2) * math.log2(params.r + 1)
