#!/usr/bin/env python3
"""Interval elimination: how partial local inequalities forbid a log-range.

A bound configuration packages the auxiliary prime set S, the exponent
floors, and per-prime volume constants. When the derived constant b1 stays
below 1 and the ceiling nk(S)*log(pN) clears b2/(1-b1), the whole open
interval between them is impossible for log(N). The replay oracle walks the
inequality chain on a concrete N and must land on the same interval.
"""

import random
from fractions import Fraction

from gfekit.bounds import (
    derived_constants,
    elimination_from_constants,
    forbidden_interval,
    lemma13_chain,
    scenario,
)
from gfekit.linlog import LinLog
from gfekit.ramification import VolNotConfigured, VolTable

import sys
import pathlib

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent))
from tests.conftest import synthetic_config  # noqa: E402

# 1. The hand-checkable elimination step: b1 = 1/2, b2 = 10, ceiling 30.
res = elimination_from_constants(Fraction(1, 2), LinLog.of(10), LinLog.of(30))
print(f"hand example: applicable={res.applicable}, "
      f"interval=({res.interval[0]}, {res.interval[1]})")

# 2. A synthetic configuration with a concrete N, replayed two ways.
rng = random.Random(4)
cfg = synthetic_config(rng)
while not forbidden_interval(cfg).applicable:
    cfg = synthetic_config(rng)
dc = derived_constants(cfg)
res = forbidden_interval(cfg)
replay = lemma13_chain(cfg)
print(f"\nsynthetic N = {cfg.n_value.value()} with S = {cfg.s_primes}")
print(f"  b1 = {dc.b1} ({float(dc.b1):.4f}), b2 = {float(dc.b2):.4f}")
print(f"  closed-form interval: ({float(res.interval[0]):.4f}, "
      f"{float(res.interval[1]):.4f})")
print(f"  chain replay interval: ({float(replay.interval[0]):.4f}, "
      f"{float(replay.interval[1]):.4f})")
print(f"  chain steps all hold: {replay.all_hold()}")

# 3. The lemma-specified scenario needs raw volume constants; the published
# tables only carry aggregates, so this errs loudly rather than guessing.
try:
    scenario("general", (5, 7, 11), "a", s_primes=(17, 19), k=2,
             tables=VolTable())
    derived_constants(scenario("general", (5, 7, 11), "a",
                               s_primes=(17, 19), k=2, tables=VolTable()))
except VolNotConfigured as exc:
    print(f"\nscenario without raw volume constants: {exc}")
