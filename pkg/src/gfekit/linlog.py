"""Certified arithmetic for quantities of the form q0 + sum(qi * log(pi)).

Everything the bound engine compares is a rational combination of logarithms
of primes. Such a combination is zero only when every coefficient is zero
(linear independence of prime logs over Q), so the sign of a nonzero
combination is always decidable: rationally when log-free, otherwise by
outward-rounded interval evaluation at doubling precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath
from mpmath import ctx_iv

__all__ = ["LinLog", "PrecisionExhausted", "log_atom", "log_of_int",
           "set_precision", "get_precision"]

Rat = Union[int, Fraction]

DEFAULT_PRECISION = 128
MAX_PRECISION = 1024
_precision = [DEFAULT_PRECISION, MAX_PRECISION]


def set_precision(initial: int = DEFAULT_PRECISION, maximum: int = MAX_PRECISION) -> None:
    """Configure the mantissa widths used for certified comparisons."""
    if not 16 <= initial <= maximum:
        raise ValueError("need 16 <= initial <= maximum")
    _precision[0] = initial
    _precision[1] = maximum


def get_precision() -> tuple[int, int]:
    return _precision[0], _precision[1]


class PrecisionExhausted(ArithmeticError):
    """Sign of a comparison still straddles zero at the maximum precision."""


def _as_fraction(x: Rat) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class LinLog:
    """const + sum of coeff * log(prime), all coefficients exact rationals."""

    const: Fraction
    logs: tuple[tuple[int, Fraction], ...]  # (prime, coefficient), sorted

    @staticmethod
    def of(x: Rat) -> "LinLog":
        return LinLog(_as_fraction(x), ())

    @staticmethod
    def build(const: Rat, logs: dict[int, Rat]) -> "LinLog":
        items = []
        for p, c in sorted(logs.items()):
            c = _as_fraction(c)
            if c:
                items.append((p, c))
        return LinLog(_as_fraction(const), tuple(items))

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: "LinLog | Rat") -> "LinLog":
        other = _coerce(other)
        logs = dict(self.logs)
        for p, c in other.logs:
            logs[p] = logs.get(p, Fraction(0)) + c
        return LinLog.build(self.const + other.const, logs)

    __radd__ = __add__

    def __neg__(self) -> "LinLog":
        return LinLog(-self.const, tuple((p, -c) for p, c in self.logs))

    def __sub__(self, other: "LinLog | Rat") -> "LinLog":
        return self + (-_coerce(other))

    def __rsub__(self, other: "LinLog | Rat") -> "LinLog":
        return _coerce(other) + (-self)

    def scale(self, k: Rat) -> "LinLog":
        k = _as_fraction(k)
        if k == 0:
            return LinLog.of(0)
        return LinLog(self.const * k, tuple((p, c * k) for p, c in self.logs))

    def __mul__(self, k: Rat) -> "LinLog":
        return self.scale(k)

    __rmul__ = __mul__

    def __truediv__(self, k: Rat) -> "LinLog":
        return self.scale(Fraction(1) / _as_fraction(k))

    # -- evaluation and comparison ----------------------------------------

    def is_rational(self) -> bool:
        return not self.logs

    def rational_value(self) -> Fraction:
        if self.logs:
            raise ValueError("not a log-free quantity")
        return self.const

    def interval(self, prec: int = DEFAULT_PRECISION):
        """Outward-rounded enclosure as an mpmath interval."""
        ctx = ctx_iv.MPIntervalContext()
        ctx.prec = prec
        acc = _iv_fraction(ctx, self.const)
        for p, c in self.logs:
            acc += _iv_fraction(ctx, c) * ctx.log(p)
        return acc

    def sign(self) -> int:
        """Certified sign (-1, 0, +1); 0 only for the exact zero combination."""
        if not self.logs:
            return (self.const > 0) - (self.const < 0)
        prec, cap = get_precision()
        while prec <= cap:
            enc = self.interval(prec)
            if enc.a > 0:
                return 1
            if enc.b < 0:
                return -1
            prec *= 2
        raise PrecisionExhausted(f"sign of {self} undecided at {cap} bits")

    def __lt__(self, other: "LinLog | Rat") -> bool:
        return (self - _coerce(other)).sign() < 0

    def __gt__(self, other: "LinLog | Rat") -> bool:
        return (self - _coerce(other)).sign() > 0

    def __le__(self, other: "LinLog | Rat") -> bool:
        return (self - _coerce(other)).sign() <= 0

    def __ge__(self, other: "LinLog | Rat") -> bool:
        return (self - _coerce(other)).sign() >= 0

    def precision_used(self) -> int:
        """Bits needed to certify this quantity's sign (for certificates)."""
        if not self.logs:
            return 0
        prec, cap = get_precision()
        while prec <= cap:
            enc = self.interval(prec)
            if enc.a > 0 or enc.b < 0:
                return prec
            prec *= 2
        raise PrecisionExhausted(f"sign of {self} undecided")

    def __float__(self) -> float:
        acc = float(self.const)
        for p, c in self.logs:
            acc += float(c) * mpmath.log(p)
        return float(acc)

    def __repr__(self) -> str:
        parts = [str(self.const)] if self.const or not self.logs else []
        for p, c in self.logs:
            parts.append(f"{c}*log({p})")
        return " + ".join(parts)


def _coerce(x: "LinLog | Rat") -> LinLog:
    return x if isinstance(x, LinLog) else LinLog.of(x)


def _iv_fraction(ctx, q: Fraction):
    return ctx.mpf(q.numerator) / ctx.mpf(q.denominator)


def log_atom(p: int, coeff: Rat = 1) -> LinLog:
    """coeff * log(p) for a prime atom p."""
    return LinLog.build(0, {p: coeff})


def log_of_int(n: int, coeff: Rat = 1) -> LinLog:
    """coeff * log(n) for a positive integer, split over its prime factors."""
    from .arith import factor

    if n < 1:
        raise ValueError(f"log_of_int requires n >= 1, got {n}")
    if n == 1:
        return LinLog.of(0)
    coeff = _as_fraction(coeff)
    return LinLog.build(0, {p: coeff * e for p, e in factor(n).items()})
