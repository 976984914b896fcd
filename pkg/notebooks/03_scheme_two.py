"""
The blended scheme
==================

Scheme two hides ``P ⊗ [(X⊗U) ⊕ (Y⊗V)]`` behind a random mask ``E``.
Its signatures are about half again as large.
"""

# %%
import random

from tropsig import Params, generate_keypair, sign_v1, sign_v2, verify_v2
from tropsig.codec import signature_compact_size

rng = random.Random(2)
key2 = generate_keypair(Params(scheme=2), rng)
sig2 = sign_v2(b"hello", key2, rng)
print(verify_v2(b"hello", sig2, key2.public))
print({k: getattr(sig2, k).degree for k in sig2.LABELS})

# %%
key1 = generate_keypair(Params(scheme=1), rng)
s1 = signature_compact_size(sign_v1(b"hello", key1, rng))
s2 = signature_compact_size(sig2)
print(f"scheme one {s1} B, scheme two {s2} B, ratio {s2 / s1:.2f}")

# %%
# With hash_mode="2d" the hash polynomial is squared and S4, E grow to degree 4d.
key2d = generate_keypair(Params(d=32, scheme=2, hash_mode="2d"), rng)
sig2d = sign_v2(b"hello", key2d, rng)
print(sig2d.P.degree, sig2d.S4.degree, verify_v2(b"hello", sig2d, key2d.public))
