"""
Min-plus polynomials
====================

Addition is ``min`` and multiplication is ``+``. An absent monomial is
``EPS`` (+inf), which is not the same thing as a zero coefficient.
"""

# %%
from tropsig import EPS, TropicalPoly, otimes, residual_quotient, scalar_otimes

p = TropicalPoly([EPS, 2, 3])   # 2⊗x ⊕ 3⊗x²
q = TropicalPoly([5, 1])        # 5 ⊕ 1⊗x
print("p      =", p)
print("q      =", q)
print("p ⊕ q  =", p + q)
print("p ⊗ q  =", p * q)

# %%
# A polynomial whose coefficients are all 0 is not the multiplicative unit.
z = TropicalPoly([EPS, 0, 0])
r = TropicalPoly([EPS, 2])
print(z * r, "is not", r)
print(TropicalPoly([0]) * r, "is", r)

# %%
# Shifting every coefficient by the same constant gives a "constant multiple".
print(scalar_otimes(3, q), "= 3 ⊗", f"({q})")

# %%
# Division: the residual quotient recovers a factor of a known product.
c = otimes(p, q)
print("c / p =", residual_quotient(c, p))

# The coefficients live in a read-only int64 array.
print(c.array, c.finite_mask())
