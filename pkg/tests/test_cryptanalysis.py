import random

import pytest

from oracles import all_factorizations
from tropsig.cryptanalysis import (AttackReport, WorkLimitError, brute_force_factor,
                                   canonical_pair, contains_pair, division_attack_v1,
                                   forgery_battery, run_division_attack)
from tropsig.keygen import Params, generate_keypair, random_poly
from tropsig.scheme_one import sign_v1
from tropsig.scheme_two import sign_v2
from tropsig.semiring import TropicalPoly, otimes, residual_quotient

T = TropicalPoly

# 0 ⊕ 0x ⊕ 0x² ⊕ 0x³ ⊕ 0x⁴ factors as (0⊕0x⊕0x²) ⊗ (0⊕cx⊕0x²) for c = 0, 1, 2.
WITNESS = T([0, 0, 0, 0, 0])
WITNESS_FACTORS = [(T([0, 0, 0]), T([0, c, 0])) for c in range(3)]

# No (a, b) with degrees (2, 2) and coefficients in [0, 2] multiplies to this.
NO_FACTOR = T([3, 3, 0, 2, 4])


def test_witness_has_three_incomparable_factorizations():
    report = brute_force_factor(WITNESS, 2, 2, 2)
    assert len(report.factorizations) == 3
    for a, b in WITNESS_FACTORS:
        assert otimes(a, b) == WITNESS
        assert contains_pair(report, a, b)
    assert len({canonical_pair(a, b) for a, b in WITNESS_FACTORS}) == 3


def test_no_factorization_target():
    assert all_factorizations(NO_FACTOR.coeffs, 2, 2, 2) == []
    assert brute_force_factor(NO_FACTOR, 2, 2, 2).factorizations == []


def test_oracle_agrees_with_plain_enumeration():
    rng = random.Random(1)
    for _ in range(25):
        target = otimes(random_poly(2, 2, rng), random_poly(1, 2, rng))
        report = brute_force_factor(target, 2, 1, 2)
        expected = {canonical_pair(T(a), T(b))
                    for a, b in all_factorizations(target.coeffs, 2, 1, 2)}
        assert {canonical_pair(a, b) for a, b in report.factorizations} == expected


def test_oracle_completeness_and_soundness():
    rng = random.Random(2)
    for _ in range(100):
        X, Y = random_poly(2, 2, rng), random_poly(2, 2, rng)
        report = brute_force_factor(otimes(X, Y), 2, 2, 2)
        assert contains_pair(report, X, Y)
        assert all(otimes(a, b) == report.target for a, b in report.factorizations)
        assert report.search_space_size == 3 ** 6


def test_dedup_is_up_to_shift_and_swap():
    a, b = T([0, 1, 0]), T([1, 2, 1])
    assert canonical_pair(a, b) == canonical_pair(T([1, 2, 1]), T([0, 1, 0]))
    assert canonical_pair(a, b) != canonical_pair(T([0, 2, 0]), T([1, 1, 1]))
    assert canonical_pair(a, b) == canonical_pair(T([2, 3, 2]), T([-1, 0, -1]))


def test_work_limit_refuses():
    target = otimes(T([0] * 6), T([0] * 6))
    with pytest.raises(WorkLimitError):
        brute_force_factor(target, 5, 5, 127)
    with pytest.raises(WorkLimitError):
        brute_force_factor(WITNESS, 2, 2, 2, work_limit=100)


def test_bad_split():
    with pytest.raises(ValueError):
        brute_force_factor(WITNESS, 1, 2, 2)


def test_division_quotients_are_exact(key150):
    rng = random.Random(3)
    for i in range(20):
        sig = sign_v1(b"%d" % i, key150, rng)
        QA = residual_quotient(sig.A, sig.P)
        assert otimes(sig.P, QA) == sig.A
        assert otimes(sig.P, QA).degree == 450
        report = division_attack_v1(sig, key150.public, b"fresh %d" % i)
        assert report.trials == 1 and report.notes == "quotients exact: True"


def test_division_attack_rate_is_reported():
    report = run_division_attack(Params(d=8), 500, random.Random(4))
    print(f"\n{report}")
    assert report.trials == 500
    assert "inexact quotients: 0" in report.notes


@pytest.mark.parametrize("scheme, sign", [(1, sign_v1), (2, sign_v2)])
def test_forgery_battery(scheme, sign):
    rng = random.Random(5)
    key = generate_keypair(Params(d=32, scheme=scheme), rng)
    reports = forgery_battery(key.public, scheme, 200, rng,
                              signer=lambda m: sign(m, key, rng))
    by_name = {r.attack_name: r for r in reports}
    for r in reports:
        print(f"\n{r}", end="")
    for name in ("remark1", "constant_multiple", "replay", "random_tuple"):
        assert by_name[name].successes == 0
    suffix = "" if scheme == 1 else "'"
    assert set(by_name["remark1"].gates) == {f"V{suffix}{3 if scheme == 1 else 4}"}
    assert set(by_name["constant_multiple"].gates) <= {f"V{suffix}3", f"V{suffix}4"}
    assert set(by_name["replay"].gates) == {f"V{suffix}1"}
    assert "accepted while out of range 0" in by_name["scaled_honest"].notes


def test_battery_without_signer_skips_replay(key150):
    names = [r.attack_name for r in forgery_battery(key150.public, 1, 5, random.Random(6))]
    assert names == ["remark1", "constant_multiple", "random_tuple"]


def test_attack_report_rows():
    r = AttackReport("x", 10, 3)
    assert r.row() == "x,10,3" and r.rate == 0.3
    with pytest.raises(ValueError):
        AttackReport("x", 1, 2)
