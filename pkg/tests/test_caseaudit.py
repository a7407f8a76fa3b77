import pytest

from squareleg.caseaudit import (
    Refutation,
    audit_theorem1,
    audit_theorem2_case1,
    audit_theorem3,
    mod8_satisfiable,
)
from squareleg.errors import BadModulus, BadPrimes
from squareleg.hypotheses import (
    check_theorem1,
    check_theorem2,
    check_theorem3,
    generate_theorem1_pairs,
    generate_theorem2_moduli,
)

from oracles import odd_primes_below, odd_squarefree_upto


def test_audit_17_5():
    rep = audit_theorem1(17, 5)
    assert rep.all_refuted
    odd = [r for r in rep.rows if r.case_id.startswith("x_odd")]
    assert len(odd) == 8
    for row in odd:
        if row.case_id.endswith("EQ4"):
            assert row.refutation is Refutation.MOD8
        elif row.deltas[1] == 5:
            assert row.refutation is Refutation.QR_SUBMODULUS
        else:
            assert row.deltas[1] == 1 and row.refutation is Refutation.QR_FULL


def test_audit_5_17_odd_case_uses_congruences_only():
    rep = audit_theorem1(5, 17, parities=("x_odd",))
    assert rep.all_refuted
    assert all(r.refutation is Refutation.MOD8 for r in rep.rows)
    # the other parity needs residue arguments, and they also succeed
    assert audit_theorem1(5, 17).all_refuted


def test_audit_13_17_has_open_rows():
    rep = audit_theorem1(13, 17)
    assert not rep.all_refuted
    assert rep.count(Refutation.OPEN) >= 1
    assert not check_theorem1(13, 17).satisfied


def test_audit_unknown_parity():
    with pytest.raises(ValueError):
        audit_theorem1(17, 5, parities=("x_both",))


def test_row_count():
    rep = audit_theorem1(17, 5 * 41 * 1, parities=("x_odd",))
    assert len(rep.rows) == 2 * 4 * 2


def _mod8_by_hand(sub, d1, d2, e1, e2):
    """Verdict after the hand simplification odd^2 = 1 (mod 8)."""
    if sub == "EQ4":
        # N, m1, n1 odd; M^2 ranges over {0, 1, 4}
        first = any((2 * e2 - sg * (d1 - d2)) % 8 == 0 for sg in (1, -1))
        second = any((4 * e1 * sq - (d1 + d2)) % 8 == 0 for sq in (0, 1, 4))
    else:
        first = any((4 * e2 * sq - sg * (d1 - d2)) % 8 == 0 for sg in (1, -1) for sq in (0, 1, 4))
        second = (2 * e1 - (d1 + d2)) % 8 == 0
    return first and second


def test_mod8_verdicts_match_hand_simplification():
    for s1 in (5, 13, 17, 41, 85, 3 * 7, 11 * 19):
        for s2 in (5, 17, 1, 13 * 17, 3):
            rep = audit_theorem1(s1, s2, parities=("x_odd",))
            for row in rep.rows:
                sub = row.case_id.split("/")[1]
                by_hand = _mod8_by_hand(sub, *row.split, *row.deltas)
                assert (row.refutation is Refutation.MOD8) == (not by_hand)


def test_mod8_satisfiable_basic():
    assert mod8_satisfiable(lambda x: x * x % 8 == 1, {"x": (1, 3, 5, 7)})
    assert not mod8_satisfiable(lambda x: x * x % 8 == 3, {"x": range(8)})


def test_desk_theorem1_all_families():
    for family in (1, 2, 3, 4):
        for s1, s2 in generate_theorem1_pairs(7000, family):
            assert audit_theorem1(s1, s2).all_refuted, (s1, s2)


def test_soundness_open_rows_only_when_hypothesis_fails():
    vals = [v for v in odd_squarefree_upto(120) if v > 1]
    for s1 in vals:
        for s2 in vals:
            if audit_theorem1(s1, s2).all_refuted:
                continue
            assert not check_theorem1(s1, s2).satisfied


def test_theorem2_case1_examples():
    rep = audit_theorem2_case1(5)
    assert rep.all_refuted and len(rep.rows) == 2
    assert "consistent" in rep.notes[0]
    rep = audit_theorem2_case1(65)
    assert not rep.all_refuted
    open_splits = [r.split for r in rep.rows if r.refutation is Refutation.OPEN]
    assert (1, 65) in open_splits
    for bad in (1, 4, 0, 9):
        with pytest.raises(BadModulus):
            audit_theorem2_case1(bad)


def test_theorem2_case1_desk():
    for n in generate_theorem2_moduli(10_000):
        assert audit_theorem2_case1(n).all_refuted
    for n in odd_squarefree_upto(3000):
        if n >= 3 and audit_theorem2_case1(n).all_refuted:
            # branch r = R^2 refutes every split only when each s1 + s2 != 2 (mod 8)
            assert all((s.s1 + s.s2) % 8 != 2 for s in check_theorem2(n).splits)


def test_theorem3_audit():
    assert audit_theorem3(5, 13).all_refuted
    rep = audit_theorem3(13, 17)
    assert rep.count(Refutation.OPEN) == 2
    for p, q in [(5, 7), (5, 5), (9, 13), (3, 7)]:
        with pytest.raises(BadPrimes):
            audit_theorem3(p, q)


def test_theorem3_audit_desk():
    primes = [p for p in odd_primes_below(500) if p % 4 == 1]
    for p in primes:
        for q in primes:
            if p != q:
                assert audit_theorem3(p, q).all_refuted == check_theorem3(p, q)
