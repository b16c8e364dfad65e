from fractions import Fraction

import pytest

from gfekit.structure import (
    general_rl_cap,
    general_rl_product_cap,
    general_v2_sieve,
    general_x1_collapse_threshold,
    structure_profile,
    threers_collapse_threshold,
    threers_exponent_range,
    threers_lpart_candidates,
    threers_rl_product_cap,
    threers_v2_product_cap,
    threers_v3_sieve,
    twothree_admissible_t,
    xl_candidates,
)

# The published l-part classification for the general family.
PUBLISHED_XL = {
    (4, 11): (1, 3, 5),
    (4, 13): (1, 3),
    (4, 17): (1, 3),
    (5, 11): (1, 3),
    (5, 13): (1, 3),
    (6, 11): (1, 3),
}


def test_xl_classification_table():
    for (r, l), expected in PUBLISHED_XL.items():
        assert xl_candidates(r, l) == expected
    # everything else collapses to {1}
    for r in range(4, 30):
        for l in (11, 13, 17, 19, 23, 29, 31, 37, 41):
            if r % l == 0 or (r, l) in PUBLISHED_XL:
                continue
            assert xl_candidates(r, l) == (1,), (r, l)
    for r in (38, 69, 100, 303, 616):
        assert xl_candidates(r, 13) == (1,)


def test_xl_preconditions():
    with pytest.raises(ValueError):
        xl_candidates(3, 11)
    with pytest.raises(ValueError):
        xl_candidates(11, 11)
    with pytest.raises(ValueError):
        xl_candidates(4, 9)
    with pytest.raises(ValueError):
        xl_candidates(617, 11)


def test_general_rl_caps():
    assert general_rl_product_cap() == 37
    # pointwise caps never exceed the global product cap
    for r in (4, 5, 7, 13, 17, 34, 37, 100):
        for l in (11, 13, 17, 19):
            if r % l == 0:
                continue
            assert general_rl_cap(r, l) * r <= 40  # certified per-pair value
            assert general_rl_cap(r, l) <= 37 // r or general_rl_cap(r, l) * r <= 37 + 3
    assert general_rl_cap(38, 11) == 0
    assert general_rl_cap(4, 11) >= 1


def test_general_v2_sieve_reproduces_published_caps():
    assert general_v2_sieve() == (306, 303)


def test_general_x1_collapse():
    assert general_x1_collapse_threshold() == 69


def test_threers_caps():
    assert threers_v2_product_cap() == 667
    assert threers_v3_sieve() == (153, 137)
    assert threers_rl_product_cap() == 56
    assert threers_exponent_range() == (7, 667)
    assert threers_collapse_threshold() == 138


def test_threers_lparts_collapse_to_one():
    for r, s, l in ((7, 11, 17), (7, 11, 19), (8, 9, 17), (9, 11, 23),
                    (11, 13, 17), (20, 23, 29), (137, 139, 17)):
        xs, ys = threers_lpart_candidates(r, s, l)
        assert xs == (1,) and ys == (1,), (r, s, l)
    with pytest.raises(ValueError):
        threers_lpart_candidates(7, 8, 17)  # r = 7 forces s >= 11
    with pytest.raises(ValueError):
        threers_lpart_candidates(7, 11, 11)  # l >= 17 required


def test_twothree_admissible_exponents():
    ts = twothree_admissible_t()
    assert max(ts) == 121
    assert [t for t in ts if t >= 110] == [113, 121]
    assert all(t <= 109 or t in (113, 121) for t in ts)
    assert 11 in ts and 13 in ts and 109 in ts
    # solved-divisor sieve: these must be gone
    for t in (12, 14, 16, 18, 20, 30, 60, 70, 90, 105):
        assert t not in ts
    # 22 has no divisor among the solved exponents and stays
    assert 22 in ts


def test_structure_profile_general_spec_examples():
    prof = structure_profile("general", (4, 5, 7), 11)
    assert prof.variables["x"].lpart_candidates == (1, 3, 5)
    assert prof.variables["x"].smooth_log_cap is None  # exponent 4 at l = 11
    assert prof.variables["y"].lpart_candidates == (1, 3)
    assert prof.exponent_range == (4, 303)
    prof = structure_profile("general", (38, 39, 41), 11)
    assert prof.variables["x"].cap_el == 0
    assert prof.variables["x"].lpart_candidates == (1,)
    prof = structure_profile("general", (69, 71, 73), 11)
    assert prof.variables["x"].forced_power_of_two
    assert prof.variables["x"].cap_e2 == 306 // 69


def test_structure_profile_threers_spec_example():
    prof = structure_profile("threers", (7, 11), 17)
    assert prof.variables["y"].lpart_candidates == (1,)
    assert any("20s/7" in note for note in prof.variables["y"].notes)
    assert prof.exponent_range == (7, 667)
    assert prof.variables["x"].cap_e2 == 667 // 7
    assert prof.variables["x"].cap_e3 == 153 // 7
    assert prof.variables["x"].cap_el == 56 // 7
    prof = structure_profile("threers", (138, 139), 17)
    assert prof.variables["x"].forced_power_of_two


def test_structure_profile_twothree():
    prof = structure_profile("twothree", (113,), 11)
    var = prof.variables["z"]
    assert var.lpart_candidates == (1,)
    assert var.smooth_log_cap is not None  # z coprime-to-6 part below 35
    assert float(var.smooth_log_cap) < 3.56
    with pytest.raises(ValueError):
        structure_profile("twothree", (110,), 11)  # sieved out


def test_structure_profile_rejects_bad_l():
    with pytest.raises(ValueError):
        structure_profile("general", (4, 5, 11), 11)
