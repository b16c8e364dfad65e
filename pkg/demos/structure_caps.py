#!/usr/bin/env python3
"""Reproduce the headline structure caps from the shipped aggregate tables.

Every number printed here is computed by a sieve or fixed-point over the a2
tables, not hardcoded: the l-part classification, the 2-adic and 3-adic
exponent caps, the collapse thresholds, and the admissible exponent windows.
"""

from gfekit.structure import (
    general_rl_product_cap,
    general_v2_sieve,
    general_x1_collapse_threshold,
    structure_profile,
    threers_collapse_threshold,
    threers_exponent_range,
    threers_rl_product_cap,
    threers_v2_product_cap,
    threers_v3_sieve,
    twothree_admissible_t,
    xl_candidates,
)

print("general family (exponents >= 4)")
print("  l-part classification:")
for r, l in ((4, 11), (4, 13), (4, 17), (5, 11), (5, 13), (6, 11), (7, 11)):
    print(f"    exponent {r}, l = {l}: l-part in {xl_candidates(r, l)}")
v2, expo_max = general_v2_sieve()
print(f"  l-exponent product cap: {general_rl_product_cap()}")
print(f"  2-exponent product cap: {v2}; largest exponent with a 2-part: {expo_max}")
print(f"  smooth part collapses to 1 from exponent {general_x1_collapse_threshold()}")

print("\n(2,3,t) family")
ts = twothree_admissible_t()
print(f"  admissible t: {len(ts)} values, max {max(ts)}, "
      f"late survivors {[t for t in ts if t >= 110]}")

print("\ncube family (3, r, s)")
print(f"  exponent window: {threers_exponent_range()}")
v3, r3_max = threers_v3_sieve()
print(f"  3-exponent product cap: {v3}; 3-part vanishes above exponent {r3_max}")
print(f"  2-exponent product cap: {threers_v2_product_cap()}")
print(f"  l-exponent product cap: {threers_rl_product_cap()}")
print(f"  coordinates collapse to 2-powers from exponent "
      f"{threers_collapse_threshold()}")

print("\nfull profile for the cube family at (r, s) = (7, 11), l = 17:")
prof = structure_profile("threers", (7, 11), 17)
for name, var in prof.variables.items():
    print(f"  {name}: exponent {var.exponent}, smooth log cap "
          f"{float(var.smooth_log_cap):.3f}, l-part {var.lpart_candidates}, "
          f"e2 <= {var.cap_e2}, e3 <= {var.cap_e3}, el <= {var.cap_el}")
    for note in var.notes:
        print(f"      note: {note}")
