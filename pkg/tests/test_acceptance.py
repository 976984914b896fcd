"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are
printed even when output capture is on.
"""

import random
import time

import pytest

from conftest import random_coeffs
from fuzzing import fuzz
from oracles import digest_bits_oracle
from test_cryptanalysis import NO_FACTOR, WITNESS
from test_encoding import TEST_VECTOR
from tropsig import codec
from tropsig.bench import bench_row
from tropsig.cryptanalysis import brute_force_factor, contains_pair, forgery_battery
from tropsig.encoding import HashDigest, digest_to_poly, hash_message, message_to_poly
from tropsig.keygen import Params, generate_keypair, random_poly
from tropsig.scheme_one import sign_v1, verify_v1
from tropsig.scheme_two import sign_v2, verify_v2
from tropsig.semiring import (EPS, TropicalPoly, oplus, otimes, residual_quotient)

T = TropicalPoly


@pytest.fixture
def verdict(capsys):
    def emit(n: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {n:>2} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail
    return emit


def test_01_worked_examples(verdict):
    start = time.perf_counter()
    product = otimes(T([EPS, 2, 3]), T([5, 1]))
    non_identity = otimes(T([EPS, 0, 0]), T([EPS, 2]))
    elapsed = time.perf_counter() - start
    ok = (product == T([EPS, 7, 3, 4]) and non_identity == T([EPS, EPS, 2, 2])
          and non_identity != T([EPS, 2]) and elapsed < 1e-3)
    verdict(1, ok, f"worked products exact in {elapsed * 1e6:.0f} µs")


def test_02_semiring_laws(verdict):
    rng = random.Random(2)
    zero, one = T.eps(), T([0])
    violations = 0
    start = time.perf_counter()
    for _ in range(10_000):
        a, b, c = (T(random_coeffs(rng, max_deg=20)) for _ in range(3))
        violations += oplus(a, oplus(b, c)) != oplus(oplus(a, b), c)
        violations += otimes(a, otimes(b, c)) != otimes(otimes(a, b), c)
        violations += oplus(a, b) != oplus(b, a)
        violations += otimes(a, b) != otimes(b, a)
        violations += otimes(a, oplus(b, c)) != oplus(otimes(a, b), otimes(a, c))
        violations += oplus(a, a) != a
        violations += oplus(a, zero) != a or otimes(a, one) != a
        violations += otimes(a, zero) != zero
    elapsed = time.perf_counter() - start
    verdict(2, violations == 0 and elapsed < 10,
            f"{violations} violations over 10^4 triples in {elapsed:.2f} s")


def _symbolic_rng_poly(rng, deg):
    return T([rng.randint(-10**6, 10**6) for _ in range(deg + 1)])


def test_03_scheme_one_completeness(verdict):
    rng = random.Random(3)
    key = generate_keypair(Params(d=150, r=127), rng)
    rejected = 0
    for i in range(1000):
        m = b"acceptance-3/%d" % i
        rejected += not verify_v1(m, sign_v1(m, key, rng), key.public)
    identity_failures = 0
    for _ in range(1000):
        P, X, U, Y, V = (_symbolic_rng_poly(rng, rng.randint(0, 12)) for _ in range(5))
        lhs = otimes(otimes(P, otimes(X, U)), otimes(P, otimes(Y, V)))
        rhs = otimes(otimes(P, P), otimes(otimes(X, Y), otimes(U, V)))
        identity_failures += lhs != rhs
    verdict(3, rejected == 0 and identity_failures == 0,
            f"{rejected}/1000 honest signatures rejected, "
            f"{identity_failures}/1000 product-identity failures")


def test_04_scheme_two_completeness(verdict):
    rng = random.Random(4)
    key = generate_keypair(Params(d=150, r=127, scheme=2), rng)
    rejected = 0
    for i in range(1000):
        m = b"acceptance-4/%d" % i
        rejected += not verify_v2(m, sign_v2(m, key, rng), key.public)
    identity_failures = 0
    for _ in range(1000):
        P, X, U, Y, V, E = (_symbolic_rng_poly(rng, rng.randint(0, 12)) for _ in range(6))
        XU, YV = otimes(X, U), otimes(Y, V)
        S2, S3 = oplus(P, XU), oplus(P, YV)
        S4 = oplus(otimes(P, oplus(XU, YV)), E)
        PP_S4 = oplus(otimes(P, P), S4)
        identity_failures += oplus(otimes(P, oplus(S2, S3)), E) != PP_S4
        identity_failures += (oplus(otimes(S2, S3), E)
                              != oplus(PP_S4, otimes(otimes(X, Y), otimes(U, V))))
    verdict(4, rejected == 0 and identity_failures == 0,
            f"{rejected}/1000 honest signatures rejected, "
            f"{identity_failures} V'5/V'6 identity failures on 1000 inputs")


def test_05_forgery_negatives(verdict):
    rng = random.Random(5)
    details, ok = [], True
    expected_cm_gates = {1: {"V3", "V4"}, 2: {"V'3", "V'4"}}
    for scheme, sign in ((1, sign_v1), (2, sign_v2)):
        key = generate_keypair(Params(scheme=scheme), rng)
        reports = {r.attack_name: r for r in forgery_battery(
            key.public, scheme, 1000, rng, signer=lambda m, k=key, s=sign: s(m, k, rng))}
        for name in ("remark1", "replay", "constant_multiple"):
            ok &= reports[name].successes == 0
            details.append(f"s{scheme}/{name} {reports[name].successes}/1000")
        replay_gate = "V1" if scheme == 1 else "V'1"
        ok &= set(reports["replay"].gates) == {replay_gate}
        ok &= set(reports["constant_multiple"].gates) <= expected_cm_gates[scheme]
    verdict(5, ok, "accepted forgeries: " + ", ".join(details))


def test_06_residuation(verdict):
    rng = random.Random(6)
    failures = 0
    for _ in range(10_000):
        a = T(random_coeffs(rng, max_deg=20, eps_rate=0.1))
        b = T(random_coeffs(rng, max_deg=20, eps_rate=0.1))
        if a.is_eps or b.is_eps:
            a, b = T([rng.randint(-9, 9)]), T([rng.randint(-9, 9), 0])
        c = otimes(a, b)
        q = residual_quotient(c, a)
        failures += otimes(a, q) != c or any(x > y for x, y in zip(q.coeffs, b.coeffs))
    verdict(6, failures == 0, f"{failures}/10^4 residuation failures")


def test_07_brute_force_oracle(verdict):
    rng = random.Random(7)
    found = 0
    for _ in range(100):
        X, Y = random_poly(2, 2, rng), random_poly(2, 2, rng)
        found += contains_pair(brute_force_factor(otimes(X, Y), 2, 2, 2), X, Y)
    witness = brute_force_factor(WITNESS, 2, 2, 2)
    none = brute_force_factor(NO_FACTOR, 2, 2, 2)
    ok = found == 100 and len(witness.factorizations) >= 2 and not none.factorizations
    verdict(7, ok, f"pair recovered {found}/100; witness {WITNESS} has "
                   f"{len(witness.factorizations)} incomparable factorizations")


def test_08_performance_and_sizes(verdict):
    rng = random.Random(8)
    r150 = bench_row(150, 127, 1, 30, rng)
    r200 = bench_row(200, 127, 1, 30, rng)
    s150 = bench_row(150, 127, 2, 30, rng)
    r200_2 = bench_row(200, 127, 2, 30, rng)
    ratio = s150.sig_size / r150.sig_size
    ok = (max(r150.verify_time_median, s150.verify_time_median) <= 0.5
          and max(r200.verify_time_median, r200_2.verify_time_median) <= 1.0
          and 1000 <= r150.sig_size <= 4000
          and 1.5 * 0.75 <= ratio <= 1.5 * 1.25)
    verdict(8, ok,
            f"verify median d=150 {1000 * r150.verify_time_median:.2f}/"
            f"{1000 * s150.verify_time_median:.2f} ms, d=200 "
            f"{1000 * r200.verify_time_median:.2f}/{1000 * r200_2.verify_time_median:.2f} ms "
            f"(scheme 1/2); sig {r150.sig_size} B vs ~2000 B; scheme-two ratio {ratio:.3f}")


def test_09_encoding_golden_vectors(verdict):
    zero = digest_to_poly(HashDigest(bytes(64)), 150, 127)
    ones = digest_to_poly(HashDigest(b"\xff" * 64), 150, 127)
    real = message_to_poly(b"test", 150, 127)
    oracle = digest_bits_oracle(hash_message(b"test").data, 150, 7)
    ok = (zero == T([0] * 151) and ones == T([127] * 151)
          and list(real.coeffs) == TEST_VECTOR == oracle
          and codec.encode_poly_text(real) == "TP1 d=150 " + ",".join(map(str, TEST_VECTOR)))
    verdict(9, ok, "all-zero, all-one and pinned 'test' vectors match")


def test_10_fuzzed_signature_files(verdict):
    rng = random.Random(10)
    total, crashes, accepts = {}, [], []
    for scheme, sign in ((1, sign_v1), (2, sign_v2)):
        key = generate_keypair(Params(scheme=scheme), rng)
        sig = sign(b"fuzz target", key, rng)
        data = codec.dumps_signature(sig, key.params).encode()
        outcomes, c, a = fuzz(data, b"fuzz target", key.public, 5_000, rng)
        total[scheme] = dict(outcomes)
        crashes += c
        accepts += a
    verdict(10, not crashes and not accepts,
            f"{len(crashes)} crashes, {len(accepts)} accepted mutants out of 10^4 "
            f"(outcomes by scheme: {total})")
