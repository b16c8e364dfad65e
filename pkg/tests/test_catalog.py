import itertools

import pytest

from gfekit.catalog import (
    CatalanFamily,
    ChiClass,
    CountResult,
    Signature,
    State,
    classify_chi,
    count_remaining,
    known_solutions,
    load_registry,
    status,
)
from gfekit.search import SolutionRecord


def test_chi_examples():
    assert classify_chi(Signature(2, 3, 5)) is ChiClass.SPHERICAL
    assert classify_chi(Signature(2, 4, 4)) is ChiClass.EUCLIDEAN
    assert classify_chi(Signature(4, 5, 7)) is ChiClass.HYPERBOLIC
    assert classify_chi(Signature(2, 3, 6)) is ChiClass.EUCLIDEAN


def test_known_solutions_verify():
    entries = known_solutions()
    assert len(entries) == 10
    fixed = [e for e in entries if isinstance(e, SolutionRecord)]
    assert len(fixed) == 9
    for rec in fixed:
        assert rec.verify()
    fam = [e for e in entries if isinstance(e, CatalanFamily)]
    assert len(fam) == 1
    for n in (2, 3, 7, 50):
        assert fam[0].member(n).verify()
    idents = {r.identity() for r in fixed}
    assert "2^5 + 7^2 = 3^4" in idents
    assert "43^8 + 96222^3 = 30042907^2" in idents


def test_known_solution_signatures_consistent_with_registry():
    # No fixed known solution may sit inside a signature whose registry
    # state claims "no non-trivial primitive solutions at all" -- the solved
    # rules all mean "solved: only the known solutions", so this checks the
    # records' signatures are classified (not out of scope).
    for rec in known_solutions():
        if isinstance(rec, CatalanFamily):
            continue
        sig = Signature(rec.r, rec.s, rec.t)
        st = status(sig)
        assert st.state in (State.SOLVED, State.REMAINING, State.OUT_OF_SCOPE)


def test_status_examples():
    st = status(Signature(5, 5, 5))
    assert st.state is State.SOLVED and "(n,n,n)" in st.provenance
    st = status(Signature(4, 5, 11))
    assert st.state is State.REMAINING and "(4,5,n)" in st.provenance
    st = status(Signature(4, 5, 10))
    assert st.state is State.SOLVED and "reduces to" in st.provenance
    assert status(Signature(2, 2, 7)).state is State.OUT_OF_SCOPE
    assert status(Signature(2, 3, 6)).state is State.SOLVED
    assert status(Signature(2, 5, 7)).state is State.REMAINING
    assert status(Signature(3, 5, 7)).state is State.REMAINING
    assert status(Signature(5, 5, 11)).state is State.SOLVED  # prime >= 11
    assert status(Signature(5, 5, 12)).state is State.SOLVED  # outside all clauses


def test_status_permutation_invariance():
    for triple in ((4, 5, 11), (2, 3, 11), (3, 13, 17), (5, 6, 7), (3, 5, 49)):
        states = {status(Signature(*perm)).state
                  for perm in itertools.permutations(triple)}
        assert len(states) == 1


def test_registry_consistency():
    reg = load_registry()
    assert reg["schema_version"] == 1
    # every remaining family clause is reachable: spot one signature per family
    assert status(Signature(2, 3, 109)).state is State.REMAINING
    assert status(Signature(3, 4, 113)).state is State.REMAINING
    assert status(Signature(3, 5, 3677)).state is State.REMAINING
    assert status(Signature(3, 11, 667)).state is State.REMAINING
    assert status(Signature(3, 17, 29)).state is State.REMAINING
    assert status(Signature(2, 101, 103)).state is State.REMAINING


def test_count_ge4_reproduces_published_value():
    result = count_remaining("ge4")
    assert result.count == 244
    assert result.matches_expected
    assert result.discrepancy_report() is None
    assert len(result.ledger) == 244
    # ledger is deterministic
    again = count_remaining("ge4")
    assert again.ledger_hash == result.ledger_hash


def test_ge4_matches_published_modulus_rules():
    # The closure-derived family-1 exclusions coincide with the shipped
    # modulus records.
    reg = load_registry()
    mods = {tuple(m["pair"]): m["moduli"] for m in reg["modulus_exclusions"]}
    result = count_remaining("ge4")
    kept = {tuple(c) for c in result.ledger}
    for (a, b), moduli in mods.items():
        for n in range(7, 304):
            canon = tuple(sorted((a, b, n)))
            expected_kept = all(n % m for m in moduli)
            assert (canon in kept) == expected_kept, (canon, moduli)


def test_count_beal_reports_structured_discrepancy():
    result = count_remaining("beal")
    assert result.expected == 2446
    if result.matches_expected:
        return
    report = result.discrepancy_report()
    assert report is not None
    assert report["computed"] == result.count
    assert report["published_rules_count"] >= result.count
    # every excluded in-range signature carries a citation
    assert all(e["citation"] for e in report["excluded_in_range"])
    # the delta enumeration explains the gap between the two closures
    assert len(report["delta_signatures"]) == (
        report["published_rules_count"] - report["full_closure_count"]
    )
    for entry in report["delta_signatures"]:
        assert "reduces to" in entry["citation"]


def test_counters_mode_validation_and_exclusion_toggle():
    with pytest.raises(ValueError):
        count_remaining("all")
    raw = count_remaining("ge4", use_exclusions=False)
    assert raw.count > 244
    assert set(map(tuple, count_remaining("ge4").ledger)) <= set(map(tuple, raw.ledger))
