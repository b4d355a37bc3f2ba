#!/usr/bin/env python3
"""GF(3^t) arithmetic and the standard spread of F_3^{2t}."""

from spreadcodes import ExtFieldElem, full_spread, irreducible_poly

# the extension field is built modulo the first monic irreducible
# polynomial in low-degree-first order
for t in (1, 2, 3):
    coeffs = irreducible_poly(t)
    terms = " + ".join(
        f"{c}*x^{k}" if k else str(c) for k, c in enumerate(coeffs) if c
    )
    print(f"t={t}: modulus {terms}")

# multiplicative order: every nonzero element satisfies a^(3^t-1) = 1
t = 2
a = ExtFieldElem.from_index(t, 5)
print("\na       =", a)
print("a^8     =", a ** (3**t - 1))
print("a * a^7 =", a * a**7)

# the spread: 3^t + 1 subspaces of dimension t meeting only at zero,
# one per slope a in GF(3^t) plus the vertical member
spread = full_spread(t)
print(f"\nfull spread of F_3^{2 * t}: {len(spread)} members")
for i, member in enumerate(spread):
    print(f"  member {i}: basis rows {member.basis.tolist()}")

owner = spread.member_owner()
print("\neach nonzero vector lies in exactly one member:")
print("  owners of indices 1..12:", owner[1:13].tolist())

# duals of the members form a spread as well
downer = spread.dual_owner()
print("  dual owners of indices 1..12:", downer[1:13].tolist())
