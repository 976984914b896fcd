"""
Signing with the product scheme
===============================

Generate a key, sign a message, verify it, and see which gate catches a
few obvious tampering attempts.
"""

# %%
import random

from tropsig import Params, generate_keypair, sign_v1, verify_v1
from tropsig.codec import dumps_signature, signature_compact_size
from tropsig.semiring import otimes

rng = random.Random(1)   # reproducible demo only; leave rng unset for real keys
key = generate_keypair(Params(d=150, r=127), rng)
print("deg X =", key.X.degree, " deg Y =", key.Y.degree, " deg M =", key.M.degree)

# %%
sig = sign_v1(b"hello", key, rng)
print(verify_v1(b"hello", sig, key.public))
print(verify_v1(b"hellO", sig, key.public))
print("compact signature:", signature_compact_size(sig), "bytes")
print(dumps_signature(sig, key.params)[:120], "...")

# %%
# The trivial forgery (P, P⊗M, P⊗N, N) is stopped by the constant-multiple gate.
P, M, N = sig.P, key.M, sig.N
forged = type(sig)(P, otimes(P, M), otimes(P, N), N)
print(verify_v1(b"hello", forged, key.public))
