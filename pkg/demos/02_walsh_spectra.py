#!/usr/bin/env python3
"""Exact Walsh spectra of the two spread families, brute force vs closed form."""

from collections import Counter

from spreadcodes import (
    characteristic_function,
    classify,
    closed_walsh_value,
    full_spread,
    index_vec,
    ternary_function,
    walsh_spectrum,
)

n, t = 4, 2
spread = full_spread(t)

# f is 1 on the nonzero vectors of two chosen members, 0 elsewhere
f = characteristic_function(spread, (0, 1))
spec = walsh_spectrum(f)

print("characteristic family, n=4, s=2")
print("distinct transform values and how often they occur:")
for value, count in Counter(tuple(ab) for ab in spec.ab).most_common():
    a, b = value
    print(f"  {a:+3d} {b:+3d}z  x{count}")

# every w falls into one of three cases, and the value depends only on the case
print("\ncase-by-case closed forms, checked against the sums:")
shown = set()
for wi in range(3**n):
    case = classify(f, index_vec(wi, n))
    if case.label in shown:
        continue
    shown.add(case.label)
    closed = closed_walsh_value("char", n, 2, case)
    print(f"  w_index {wi:3d} [{case.label:8s}] sum {spec[wi]}  closed {closed}")
    assert spec[wi] == closed

# the ternary family assigns 1 and 2 to two halves of the chosen members;
# duals of the two halves carry conjugate values
g = ternary_function(spread, (0, 1, 2, 3))
gspec = walsh_spectrum(g)
print("\nternary family, n=4, s=2, the two in-dual values:")
for wi in range(1, 3**n):
    case = classify(g, index_vec(wi, n))
    if case.kind == "in_dual" and case.label not in shown:
        shown.add(case.label)
        print(f"  w_index {wi:3d} [{case.label}] {gspec[wi]}")

# global sanity: Parseval and the inversion identity at x=0
print("\nsum |f^(w)|^2 =", int(spec.norms().sum()), "= 3^(2n) =", 3 ** (2 * n))
print("sum f^(w)     =", spec.total(), "= 3^n")
