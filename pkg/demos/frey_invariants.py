#!/usr/bin/env python3
"""Frey curves attached to abc-style triples, and where their bad primes live.

Each solution candidate of the generalized Fermat equation feeds one of four
curve families; the j-denominator then carries the solution's primes, which
is what the whole bound machinery runs on. This script builds the curve for
the known identity 2^5 + 7^2 = 3^4 and prints the invariants of one triple
per family.
"""

from gfekit.freycurves import FreyFamily, abc_permutation, invariants, reduction_type

# The identity 2^5 + 7^2 = 3^4 as a zero-sum triple (delta-signs absorbed).
u, v, w = 32, 49, -81
a, b, c = abc_permutation(u, v, w)
print(f"admissible permutation of {(u, v, w)}: (a, b, c) = {(a, b, c)}")
inv = invariants(FreyFamily.GENERAL_ABC, a, b, c)
print(f"  c4 = {inv.c4}, delta = {inv.delta}, j = {inv.j}")
print(f"  j-denominator N = {inv.denom_value()} = {inv.denom_n}")
for p in (2, 3, 5, 7):
    print(f"  reduction at {p}: {reduction_type(inv, p).value}")
print()

samples = [
    (FreyFamily.TWO_THREE, (3, -2, 1)),     # from 3^2 - 2^3 = 1
    (FreyFamily.THREE_RS, (1, 7, 2)),       # a + b = c^3
    (FreyFamily.TWO_RS, (1, 3, 2)),         # a + b = c^2
]
for family, (a, b, c) in samples:
    inv = invariants(family, a, b, c)
    print(f"{family.name} {(a, b, c)}: c4={inv.c4} delta={inv.delta} "
          f"j={inv.j} N={inv.denom_value()} bad primes={sorted(inv.bad_primes)}")
