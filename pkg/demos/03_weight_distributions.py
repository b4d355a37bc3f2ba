#!/usr/bin/env python3
"""Weight distributions three ways, and the row pairing that enumeration rejects."""

from spreadcodes import (
    build_code,
    closed_form_distribution,
    distribution_from_spectrum,
    full_spread,
    ternary_function,
    walsh_spectrum,
    weight_distribution,
)

n, t, s = 4, 2, 2
f = ternary_function(full_spread(t), (0, 1, 2, 3))
code = build_code(f)
print(f"ternary family, n={n}, s={s}: a [{code.length},{code.dimension}] code")

enumerated = weight_distribution(code)
from_spectrum = distribution_from_spectrum(walsh_spectrum(f), n)
closed = closed_form_distribution("ternary", n, s)

print("\nweight  multiplicity   (enumeration / spectrum / closed form)")
for w, m in enumerated.items():
    print(
        f"  {w:4d}  {m:5d} / {from_spectrum.counts[w]:5d} / {closed.counts[w]:5d}"
    )
assert enumerated == from_spectrum == closed

# two identities pin the table down: multiplicities sum to 3^(n+1) and
# the first moment is fixed by the uniform column weights
total = enumerated.total()
moment = enumerated.total_weight()
print(f"\nsum A_w     = {total} = 3^(n+1)")
print(f"sum w * A_w = {moment} = (3^n - 1) * 2 * 3^n")

# swapping the multiplicities of the two non-uniform rows keeps the first
# identity but breaks the second, so enumeration settles which pairing holds
q, uniform = 3**t, 2 * 3 ** (n - 1)
v = 2 * s
swapped = {
    0: 1,
    v * (q - 1): 2,
    uniform: 3**n - 1,
    uniform - v: 2 * v * (q - 1),
    uniform + q - v: 2 * (q + 1 - v) * (q - 1),
}
swapped_moment = sum(w * m for w, m in swapped.items())
print(f"\nswapped pairing: sum A_w = {sum(swapped.values())} (still fine)")
print(f"swapped pairing: sum w * A_w = {swapped_moment} != {moment}  -> rejected")
