"""Ramification datasets and ramification-index bound tables.

The datasets are transcribed listings: per-prime sets of admissible
ramification indices for the torsion-field towers built over each Frey
family, with the auxiliary primes l (and q) substituted in. The log-volume
constants attached to a dataset are external configuration; the only numbers
the source publishes are per-lemma aggregate tables a2(p), shipped here with
provenance strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import divisors, is_prime
from .freycurves import FreyFamily

__all__ = [
    "RamificationDataset",
    "RamIndexBound",
    "VolTable",
    "VolNotConfigured",
    "dataset",
    "ram_index_bound",
    "vol_lookup",
    "A2_TABLES",
    "a1_coefficient",
]


class VolNotConfigured(LookupError):
    """A log-volume constant was requested but never configured.

    Defaulting to 0 would make every downstream exclusion certificate
    unsound, so the lookup is loud instead.
    """


@dataclass(frozen=True)
class RamificationDataset:
    family: FreyFamily
    kind: int
    l0: int
    e0: int
    s0: frozenset[int]
    gen_mult: frozenset[int]
    per_prime: dict[int, tuple[frozenset[int], frozenset[int]]]  # p -> (good, mult)
    q: int | None = None

    def key(self) -> tuple:
        return (self.family.name, self.kind, self.l0, self.q)


def _even_divisors(n: int) -> frozenset[int]:
    return frozenset(d for d in divisors(n) if d % 2 == 0)


def _check_l(l: int, *, forbid_13: bool = False) -> None:
    if l < 11 or not is_prime(l):
        raise ValueError(f"auxiliary prime l must be a prime >= 11, got {l}")
    if forbid_13 and l == 13:
        raise ValueError("this dataset requires l != 13")


def dataset(family: FreyFamily, kind: int, l: int, q: int | None = None) -> RamificationDataset:
    """Build the catalog dataset for (family, kind) at auxiliary prime l.

    The prime q is required exactly for the 2-torsion dataset of the
    (2,3,t) family and must satisfy q >= 5.
    """
    lgood = frozenset({l - 1, l * (l - 1), l * l - 1})

    if family is FreyFamily.GENERAL_ABC and kind in (1, 2):
        _check_l(l)
        per = {
            2: (frozenset({2}), frozenset({2, 6, 2 * l, 6 * l})),
            3: (frozenset({2, 6, 8}), frozenset({2, 6, 2 * l, 6 * l})),
            l: (lgood if kind == 1 else frozenset(),
                frozenset({l - 1, 3 * (l - 1), l * (l - 1), 3 * l * (l - 1)})),
        }
        return RamificationDataset(family, kind, l, 3, frozenset({2, 3, l}),
                                   frozenset({1, 3, l, 3 * l}), per)

    if family is FreyFamily.GENERAL_ABC and kind in (3, 4):
        _check_l(l)
        per = {
            2: (frozenset({2}), frozenset({2, 2 * l})),
            l: (lgood if kind == 3 else frozenset(),
                frozenset({l - 1, l * (l - 1)})),
        }
        return RamificationDataset(family, kind, l, 1, frozenset({2, l}),
                                   frozenset({1, l}), per)

    if family in (FreyFamily.TWO_THREE, FreyFamily.THREE_RS) and kind == 1:
        _check_l(l, forbid_13=True)
        per = {
            2: (_even_divisors(2**8 * 3**2), _even_divisors(24 * l)),
            3: (_even_divisors(2**6 * 3**2), _even_divisors(48 * l)),
            l: (lgood, frozenset((l - 1) * e for e in divisors(12 * l))),
        }
        return RamificationDataset(family, kind, l, 12, frozenset({2, 3, l}),
                                   frozenset(divisors(12 * l)), per)

    if family is FreyFamily.TWO_THREE and kind == 2:
        _check_l(l, forbid_13=True)
        if q is None or q < 5 or not is_prime(q):
            raise ValueError("the (2,3,t) 2-torsion dataset needs a prime q >= 5")
        if q * (q * q - 1) % l == 0:
            raise ValueError(f"need l coprime to q(q^2-1); got l={l}, q={q}")
        per = {
            2: (_even_divisors(2**5 * 3**2), _even_divisors(8 * q * l)),
            3: (frozenset({1}), _even_divisors(2 * q * l)),
            q: (frozenset({q - 1, q * (q - 1), q * q - 1}),
                frozenset((q - 1) * e for e in divisors(2 * l))),
            l: (lgood, frozenset((l - 1) * e for e in divisors(2 * l))),
        }
        return RamificationDataset(family, kind, l, 2, frozenset({2, 3, q, l}),
                                   frozenset({1, 2, l, 2 * l}), per, q=q)

    if family is FreyFamily.THREE_RS and kind in (2, 3):
        _check_l(l, forbid_13=True)
        per = {
            2: (_even_divisors(96), _even_divisors(8 * l)),
            3: (_even_divisors(12), _even_divisors(8 * l)),
            l: (lgood if kind == 2 else frozenset(),
                frozenset((l - 1) * e for e in divisors(4 * l))),
        }
        return RamificationDataset(family, kind, l, 4, frozenset({2, 3, l}),
                                   frozenset(divisors(4 * l)), per)

    raise ValueError(f"no such dataset in catalog: ({family.name}, kind {kind})")


# ---------------------------------------------------------------------------
# Ramification-index bounds at corollary level.


@dataclass(frozen=True)
class RamIndexBound:
    p: int
    context: str
    exact: frozenset[int] | None = None
    divides: int | None = None

    def admits(self, e: int) -> bool:
        if self.exact is not None:
            return e in self.exact
        return self.divides % e == 0


# Torsion-field selectors per family; "default" is the first listed.
FIELD_CHOICES = {
    FreyFamily.GENERAL_ABC: ("Q(i,E[3])", "Q(i)"),
    FreyFamily.TWO_THREE: ("Q(E[12])", "Q(i,E[2q])"),
    FreyFamily.THREE_RS: ("Q(E[12])", "Q(E[4])"),
    FreyFamily.TWO_RS: ("Q(i,E[6])",),
}


def ram_index_bound(
    family: FreyFamily,
    p: int,
    reduction: str,
    l: int,
    q: int | None = None,
    field: str | None = None,
) -> RamIndexBound:
    """Bound on the ramification index over p of the torsion tower.

    reduction is "good" (p does not divide the j-denominator) or
    "multiplicative" (p divides it). Returns either an exact candidate set
    or a "divides D" constraint, both straight from the covering corollary.
    """
    if reduction not in ("good", "multiplicative"):
        raise ValueError(f"reduction must be good|multiplicative, got {reduction!r}")
    good = reduction == "good"
    field = field or FIELD_CHOICES[family][0]
    ctx = f"{family.name}, F={field}, l={l}" + (f", q={q}" if q else "")
    lset = frozenset({l - 1, l * (l - 1), l * l - 1})

    def out(exact=None, divides=None):
        return RamIndexBound(p, ctx, exact=exact, divides=divides)

    if family is FreyFamily.GENERAL_ABC and field == "Q(i,E[3])":
        if good:
            if p == 2:
                return out(exact=frozenset({2}))
            if p == 3:
                return out(exact=frozenset({2, 6, 8}))
            if p == l:
                return out(exact=lset)
            return out(exact=frozenset({1}))
        if p == 2 or p == 3:
            return out(divides=6 * l)
        if p == l:
            return out(divides=3 * l * (l - 1))
        return out(divides=3 * l)

    if family is FreyFamily.GENERAL_ABC and field == "Q(i)":
        if good:
            if p == 2:
                return out(exact=frozenset({2}))
            if p == l:
                return out(exact=lset)
            return out(exact=frozenset({1}))
        if p == 2:
            return out(divides=2 * l)
        if p == l:
            return out(divides=l * (l - 1))
        return out(divides=l)

    if field == "Q(E[12])" and family in (FreyFamily.TWO_THREE, FreyFamily.THREE_RS):
        if good:
            if p == 2:
                return out(divides=2**8 * 3**2)
            if p == 3:
                return out(divides=2**6 * 3**2)
            if p == l:
                return out(exact=lset)
            return out(exact=frozenset({1}))
        if p == 2:
            return out(divides=24 * l)
        if p == 3:
            return out(divides=48 * l)
        if p == l:
            return out(divides=12 * l * (l - 1))
        return out(divides=12 * l)

    if family is FreyFamily.TWO_THREE and field == "Q(i,E[2q])":
        if q is None:
            raise ValueError("field Q(i,E[2q]) needs the prime q")
        if good:
            if p == 2:
                return out(divides=2**5 * 3**2)
            if p == q:
                return out(exact=frozenset({q - 1, q * (q - 1), q * q - 1}))
            if p == l:
                return out(exact=lset)
            return out(exact=frozenset({1}))
        if p == 2:
            return out(divides=8 * q * l)
        if p == q:
            return out(divides=2 * q * l * (q - 1))
        if p == l:
            return out(divides=2 * l * (l - 1))
        return out(divides=2 * q * l)

    if family is FreyFamily.THREE_RS and field == "Q(E[4])":
        if good:
            if p == 2:
                return out(divides=96)
            if p == 3:
                return out(divides=12)
            if p == l:
                return out(exact=lset)
            return out(exact=frozenset({1}))
        if p == 2 or p == 3:
            return out(divides=8 * l)
        if p == l:
            return out(divides=4 * l * (l - 1))
        return out(divides=4 * l)

    if family is FreyFamily.TWO_RS and field == "Q(i,E[6])":
        if good:
            if p == 2:
                return out(divides=2**5 * 3**2)
            if p == 3:
                return out(divides=2**6 * 3**2)
            if p == l:
                return out(exact=lset)
            return out(exact=frozenset({1}))
        if p == 2:
            return out(divides=24 * l)
        if p == 3:
            return out(divides=12 * l)
        if p == l:
            return out(divides=6 * l * (l - 1))
        return out(divides=6 * l)

    raise ValueError(f"no index bound covers ({family.name}, field {field!r})")


# ---------------------------------------------------------------------------
# Log-volume configuration and the published aggregate tables.


@dataclass
class VolTable:
    """Raw log-volume enclosures per dataset key, plus aggregate a2 tables.

    Raw entries and aggregates never substitute for each other silently;
    a missing key is an error.
    """

    raw: dict[tuple, Fraction] = field(default_factory=dict)
    aggregates: dict[str, dict[int, Fraction]] = field(default_factory=dict)
    provenance: dict[str, str] = field(default_factory=dict)

    def set_raw(self, key: tuple, value: Fraction, provenance: str = "user-supplied") -> None:
        self.raw[key] = Fraction(value)
        self.provenance[str(key)] = provenance

    def has_raw(self, key: tuple) -> bool:
        return key in self.raw


def vol_lookup(table: VolTable, key: tuple) -> Fraction:
    """Raw Vol enclosure for a dataset key; loud if unconfigured."""
    if key not in table.raw:
        raise VolNotConfigured(f"Vol constant not configured for dataset {key}")
    return table.raw[key]


def aggregate_lookup(table: VolTable, lemma: str, p: int) -> Fraction:
    agg = table.aggregates.get(lemma)
    if agg is None or p not in agg:
        raise VolNotConfigured(f"a2 aggregate not configured for ({lemma}, {p})")
    return agg[p]


def _frac(x: str) -> Fraction:
    return Fraction(x)


# Published aggregate bounds a2(p), keyed by the deriving lemma. The two
# general-family tables differ only at p=23 (91.1 vs 92); both are kept.
A2_TABLES: dict[str, dict[int, Fraction]] = {
    "general-2tor": {11: _frac("71"), 13: _frac("74"), 17: _frac("80"),
                     19: _frac("84"), 23: _frac("91.1")},
    "general-2tor-alt": {11: _frac("71"), 13: _frac("74"), 17: _frac("80"),
                         19: _frac("84"), 23: _frac("92")},
    "general-mu6": {17: _frac("156"), 19: _frac("164"), 23: _frac("182"),
                    29: _frac("210"), 31: _frac("219"), 37: _frac("248")},
    "threers-2tor": {17: _frac("403"), 19: _frac("425"), 23: _frac("472"),
                     29: _frac("544"), 31: _frac("578")},
    "threers-mu6": {17: _frac("978"), 19: _frac("1041"), 23: _frac("1178"),
                    29: _frac("1389"), 31: _frac("1475")},
}

A2_PROVENANCE = {
    "general-2tor": "general family, datasets 3/4 (x_l classification and l-part caps)",
    "general-2tor-alt": "general family, datasets 3/4, joint-bound restatement",
    "general-mu6": "general family, datasets 1/2 (2-adic valuation caps)",
    "threers-2tor": "cube family, datasets 2/3 (smooth/3-part/l-part caps)",
    "threers-mu6": "cube family, dataset 1 (2-adic valuation caps)",
}


def default_vol_table() -> VolTable:
    """Aggregate-only table; raw Vol entries are never published."""
    table = VolTable(aggregates={k: dict(v) for k, v in A2_TABLES.items()},
                     provenance=dict(A2_PROVENANCE))
    return table


def a1_coefficient(kind: str, p: int) -> Fraction:
    """Exact a1(p) coefficient used by the structure lemmas.

    kind selects the dataset blend: the factor is
    lam * (p^2+5p)/(p^2+p-12) * (1 - 1/(e0*p)) with (lam, e0) per table.
    """
    rho = Fraction(p * p + 5 * p, p * p + p - 12)
    params = {
        "general-2tor": (3, 1),      # halved lambda=6, e0=1
        "general-2tor-alt": (3, 1),
        "general-mu6": (3, 3),       # halved lambda=6, e0=3
        "threers-2tor": (6, 4),
        "threers-mu6": (6, 12),
        "twothree-2tor": (6, 2),
    }
    if kind not in params:
        raise ValueError(f"unknown a1 coefficient table {kind!r}")
    lam, e0 = params[kind]
    return lam * rho * (1 - Fraction(1, e0 * p))
