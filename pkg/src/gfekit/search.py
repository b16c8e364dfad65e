"""Decomposition-constrained exhaustive search primitives.

Candidate coordinates are enumerated from structure profiles (smooth part,
2/3/l-exponents, l-part), then finite boxes are checked exactly: is
|x^r +- y^s| a perfect power with an admissible exponent? Every emitted
record re-verifies by exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import integer_nth_root, is_perfect_square, k_full_part, factor
from .linlog import LinLog, log_of_int
from .structure import VariableProfile

__all__ = [
    "Decomposition",
    "SolutionRecord",
    "enumerate_candidates",
    "check_pair",
    "check_power_tail",
    "small_z1_scan",
]


@dataclass(frozen=True)
class Decomposition:
    """x = smooth * 2^e2 * 3^e3 * l^el * l_part^l, all parts pairwise coprime."""

    smooth: int
    e2: int
    e3: int
    el: int
    l_part: int
    l: int

    def value(self) -> int:
        return (self.smooth * 2**self.e2 * 3**self.e3
                * self.l**self.el * self.l_part**self.l)


@dataclass(frozen=True)
class SolutionRecord:
    x: int
    y: int
    z: int
    r: int
    s: int
    t: int
    sign_r: int
    sign_s: int

    def verify(self) -> bool:
        if min(self.x, self.y, self.z) < 1 or self.sign_r not in (1, -1) \
                or self.sign_s not in (1, -1):
            return False
        if math.gcd(math.gcd(self.x, self.y), self.z) != 1:
            return False
        return (self.sign_r * self.x**self.r + self.sign_s * self.y**self.s
                == self.z**self.t)

    def identity(self) -> str:
        def term(sign, base, expo):
            return f"{'-' if sign < 0 else ''}{base}^{expo}"
        lhs = f"{term(self.sign_r, self.x, self.r)} + {term(self.sign_s, self.y, self.s)}"
        return f"{lhs} = {self.z}^{self.t}".replace("+ -", "- ")

    def as_dict(self) -> dict:
        return {
            "x": self.x, "y": self.y, "z": self.z,
            "r": self.r, "s": self.s, "t": self.t,
            "sign_r": self.sign_r, "sign_s": self.sign_s,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SolutionRecord":
        rec = cls(**{k: int(v) for k, v in d.items()})
        if not rec.verify():
            raise ValueError(f"record fails exact re-verification: {rec.identity()}")
        return rec

    def sort_key(self) -> tuple:
        return (self.z, self.t, self.x, self.r, self.y, self.s,
                self.sign_r, self.sign_s)


def _mk_record(x, r, sx, y, s, sy, z, t) -> SolutionRecord:
    rec = SolutionRecord(x=x, y=y, z=z, r=r, s=s, t=t, sign_r=sx, sign_s=sy)
    if not rec.verify():
        raise AssertionError(f"emitted record fails verification: {rec}")
    return rec


def enumerate_candidates(
    profile: VariableProfile,
    l: int,
    *,
    smooth_limit: int | None = None,
) -> list[tuple[int, Decomposition]]:
    """All coordinate values admitted by a variable profile, with their
    decompositions, sorted by value and duplicate-free.

    smooth_limit optionally truncates the smooth-part enumeration (for
    desk-scale boxes); the truncation is the caller's to record.
    """
    if not profile.is_finite() and smooth_limit is None:
        raise ValueError(f"profile for {profile.name!r} is unbounded")
    smooth_vals = _smooth_values(profile, l, smooth_limit)
    out: dict[int, Decomposition] = {}
    e3_range = range(profile.cap_e3 + 1)
    for smooth in smooth_vals:
        for lp in (profile.lpart_candidates or (1,)):
            for el in range(profile.cap_el + 1):
                for e2 in range(profile.cap_e2 + 1):
                    for e3 in e3_range:
                        dec = Decomposition(smooth, e2, e3, el, lp, l)
                        if profile.forced_power_of_two and (
                                smooth != 1 or lp != 1 or el or e3):
                            continue
                        val = dec.value()
                        if val in out:
                            raise AssertionError(f"duplicate candidate {val}")
                        out[val] = dec
    return sorted(out.items())


def _smooth_values(profile: VariableProfile, l: int, limit: int | None) -> list[int]:
    if profile.forced_power_of_two:
        return [1]
    cap = None
    if profile.smooth_log_cap is not None:
        cap = Fraction(profile.smooth_log_cap)
    vals = [1]
    m = 1
    while True:
        m += 1
        if limit is not None and m > limit:
            break
        if cap is not None and log_of_int(m) > LinLog.of(cap):
            break
        if any(m % p == 0 for p in profile.smooth_coprime_to):
            continue
        # The smooth part must not hide an l-full block (uniqueness of the
        # decomposition) nor the prime l itself.
        if m % l == 0 or not k_full_part(factor(m), l).is_one():
            continue
        vals.append(m)
    return vals


def _roots_of(value: int, exponents) -> list[tuple[int, int]]:
    """(base, exponent) pairs with base^exponent == value, exponent in set."""
    if value <= 0:
        return []
    out = []
    for t in sorted(set(exponents)):
        root, exact = integer_nth_root(value, t)
        if exact:
            out.append((root, t))
    return out


def check_pair(
    x_candidates,
    r: int,
    y_candidates,
    s: int,
    t_set,
    *,
    allow_unit_root: bool = False,
) -> list[SolutionRecord]:
    """Check |x^r +- y^s| = z^t over two candidate lists, exactly.

    Candidates may be plain ints or (value, Decomposition) pairs. Records
    are normalized to sign_r * x^r + sign_s * y^s = z^t with positive
    x, y, z; roots z = 1 are dropped unless allow_unit_root (they belong to
    the unit-difference family, not to the search target).
    """
    xs = [c[0] if isinstance(c, tuple) else c for c in x_candidates]
    ys = [c[0] if isinstance(c, tuple) else c for c in y_candidates]
    t_set = tuple(sorted(set(t_set)))
    found: dict[tuple, SolutionRecord] = {}
    for x in xs:
        xr = x**r
        for y in ys:
            if math.gcd(x, y) != 1:
                continue
            ys_ = y**s
            total = xr + ys_
            diff = xr - ys_
            for value, sx, sy in ((total, 1, 1), (abs(diff), 1, -1) if diff >= 0
                                  else (abs(diff), -1, 1)):
                if value == 0:
                    continue
                for z, t in _roots_of(value, t_set):
                    if z == 1 and not allow_unit_root:
                        continue
                    if math.gcd(x, z) != 1 or math.gcd(y, z) != 1:
                        continue
                    rec = _mk_record(x, r, sx, y, s, sy, z, t)
                    found[rec.sort_key()] = rec
    return [found[k] for k in sorted(found)]


def check_power_tail(
    y_candidates,
    s: int,
    r_set,
    m_range,
    *,
    m_bounds: tuple[int, int] = (70, 306),
) -> list[SolutionRecord]:
    """Check |y^s +- 2^m| = x^r over a candidate list and a 2-power window.

    This is the branch where the third coordinate is forced to be a pure
    power of two: z^t = 2^m with m in the published window. Exponents for
    the root side come from r_set; records store z = 2^(m/t) resolved over
    every admissible split t | m with t >= m_bounds[0].
    """
    lo, hi = m_bounds
    ys = [c[0] if isinstance(c, tuple) else c for c in y_candidates]
    out: dict[tuple, SolutionRecord] = {}
    for m in m_range:
        if not lo <= m <= hi:
            raise ValueError(f"2-power exponent {m} outside window [{lo},{hi}]")
        pw = 2**m
        for y in ys:
            if y % 2 == 0:
                continue
            ys_ = y**s
            for value, sy in ((ys_ + pw, 1), (abs(ys_ - pw), 1 if ys_ > pw else -1)):
                if value == 0:
                    continue
                for x, r in _roots_of(value, r_set):
                    if x % 2 == 0 or x == 1:
                        continue
                    for t in range(lo, m + 1):
                        if m % t:
                            continue
                        z = 2 ** (m // t)
                        rec = _tail_record(x, r, y, s, ys_, pw, z, t)
                        if rec is not None:
                            out[rec.sort_key()] = rec
    return [out[k] for k in sorted(out)]


def _tail_record(x, r, y, s, ys_, pw, z, t) -> SolutionRecord | None:
    """Normalize x^r = |y^s +- 2^m| into sign_r x^r + sign_s y^s = z^t."""
    xr = x**r
    if xr == ys_ + pw:      # x^r - y^s = 2^m
        return _mk_record(x, r, 1, y, s, -1, z, t)
    if xr == ys_ - pw:      # y^s - x^r = 2^m
        return _mk_record(x, r, -1, y, s, 1, z, t)
    if xr == pw - ys_:      # x^r + y^s = 2^m
        return _mk_record(x, r, 1, y, s, 1, z, t)
    return None


# ---------------------------------------------------------------------------
# Small-z scan for the (2,3,t) family.


def small_z1_scan(
    z1_bound: int = 19,
    t_max: int = 9,
    height_bound: int = 2 * 10**12,
    *,
    y_window: int = 10**5,
    t_min: int = 7,
) -> list[SolutionRecord]:
    """Brute-force the tuples (d2 x^2, d3 y^3, z^t) with small z.

    Scans z whose coprime-to-6 part is below z1_bound, exponents
    t_min <= t <= t_max with z^t <= height_bound, plus the degenerate
    z = 1 target. The x^2 = y^3 +- z^t branches iterate y up to y_window
    (the scan is a bounded reproduction, not a completeness proof).
    Enlarging any bound can only grow the result set.
    """
    if z1_bound < 1 or t_max < t_min:
        raise ValueError("empty scan box")
    out: dict[tuple, SolutionRecord] = {}

    def coprime6_part(z: int) -> int:
        while z % 2 == 0:
            z //= 2
        while z % 3 == 0:
            z //= 3
        return z

    def emit(x, sx, y, sy, z, t):
        if x < 1 or y < 1 or math.gcd(x, y) != 1:
            return
        if math.gcd(x, z) != 1 or math.gcd(y, z) != 1:
            return
        rec = _mk_record(x, 2, sx, y, 3, sy, z, t)
        out[(sx * x * x, sy * y**3, z**t)] = rec

    # Degenerate target z^t = 1: x^2 - y^3 = +-1 within the window.
    for y in range(2, min(y_window, 10**4) + 1):
        y3 = y**3
        for target, sx, sy in ((y3 + 1, 1, -1), (y3 - 1, -1, 1)):
            x, exact = is_perfect_square(target)
            if exact and x >= 1 and math.gcd(x, y) == 1:
                if sx * x * x + sy * y3 == 1:
                    emit(x, sx, y, sy, 1, t_min)

    zs = [z for z in range(2, int(height_bound ** (1 / t_min)) + 2)
          if coprime6_part(z) < z1_bound]
    for z in zs:
        for t in range(t_min, t_max + 1):
            zt = z**t
            if zt > height_bound:
                break
            # x^2 + y^3 = z^t
            y = 1
            while y**3 <= zt:
                if math.gcd(y, z) == 1:
                    x, exact = is_perfect_square(zt - y**3)
                    if exact and x >= 1:
                        emit(x, 1, y, 1, z, t)
                y += 1
            # x^2 = z^t + y^3 and x^2 = y^3 - z^t
            for y in range(1, y_window + 1):
                if math.gcd(y, z) != 1:
                    continue
                y3 = y**3
                x, exact = is_perfect_square(y3 + zt)
                if exact:
                    emit(x, 1, y, -1, z, t)   # x^2 - y^3 = z^t
                if y3 > zt:
                    x, exact = is_perfect_square(y3 - zt)
                    if exact:
                        emit(x, -1, y, 1, z, t)  # y^3 - x^2 = z^t
    return [out[k] for k in sorted(out)]
