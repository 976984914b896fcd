"""
Small-scale attacks
===================

Exhaustive factoring at toy sizes, the division attack, and the forgery
battery at realistic size.
"""

# %%
import random

from tropsig import Params, generate_keypair, sign_v1
from tropsig.cryptanalysis import (brute_force_factor, forgery_battery, key_space_log2,
                                   run_division_attack)
from tropsig.semiring import TropicalPoly

rng = random.Random(3)

# The all-zero quartic has several genuinely different factorizations.
print(brute_force_factor(TropicalPoly([0, 0, 0, 0, 0]), 2, 2, 2))

# %%
# Divide P out of a signature and multiply in a fresh hash. It sometimes works.
for d in (8, 16, 32):
    print(run_division_attack(Params(d=d), 200, rng))

# %%
key = generate_keypair(Params(), rng)
for report in forgery_battery(key.public, 1, 100, rng,
                              signer=lambda m: sign_v1(m, key, rng)):
    print(report)
print(f"raw key space at d=150: 2^{key_space_log2(Params()):.0f}")
