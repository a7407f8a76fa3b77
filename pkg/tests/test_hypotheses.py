import pytest

from squareleg.arith import OddSquarefree, legendre
from squareleg.errors import BadFamily, NotOddSquarefree
from squareleg.hypotheses import (
    characterize_theorem2,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    check_theorem4,
    generate_theorem1_pairs,
    generate_theorem2_moduli,
)

from oracles import naive_factor, odd_primes_below, odd_squarefree_upto


def test_theorem1_examples():
    r = check_theorem1(17, 5)
    assert r.satisfied and r.cond_a and r.cond_b and r.cond_c and r.witness is None
    r = check_theorem1(9, 5)
    assert not r.cond_a and not r.satisfied
    r = check_theorem1(13, 5)
    assert r.cond_a and not r.cond_b and not r.satisfied


def test_theorem1_witness():
    # 17 = 2^2 (mod 13)
    r = check_theorem1(17, 13)
    assert r.cond_b and not r.cond_c and r.witness == 13
    # 73 is a nonresidue mod 5 but 73 = 32 = 2^5 is a residue mod 41
    r = check_theorem1(73, 5 * 41)
    assert r.cond_b and not r.cond_c and r.witness == 41


def test_theorem1_degenerate_inputs():
    for s1, s2 in [(1, 5), (5, 1), (1, 1), (0, 5), (85, 17)]:
        assert not check_theorem1(s1, s2).satisfied


def test_theorem1_symmetry():
    for s1 in range(1, 400, 2):
        for s2 in (1, 5, 13, 17, 41, 85, 205):
            assert check_theorem1(s1, s2).satisfied == check_theorem1(s2, s1).satisfied


def test_theorem2_examples():
    r = check_theorem2(5)
    assert r.satisfied and [(s.s1, s.s2) for s in r.splits] == [(1, 5)]
    r = check_theorem2(65)
    assert not r.satisfied and not r.splits[0].ok and r.splits[0].residues == (1, 1)
    r = check_theorem2(85)
    assert r.satisfied and [(s.s1, s.s2) for s in r.splits] == [(1, 85), (5, 17)]
    assert not check_theorem2(1).satisfied
    with pytest.raises(NotOddSquarefree):
        check_theorem2(4)


def test_theorem2_split_count():
    for v in (5, 85, 5 * 13 * 17, 3 * 5 * 7 * 11):
        n = OddSquarefree.of(v)
        assert len(check_theorem2(n).splits) == 2 ** (n.omega - 1)


def test_characterize_examples():
    assert characterize_theorem2(5)
    assert not characterize_theorem2(65)
    assert characterize_theorem2(85)
    assert not characterize_theorem2(1)


def test_theorem2_implies_5_mod_8():
    for n in odd_squarefree_upto(20_000):
        if check_theorem2(n).satisfied:
            assert n % 8 == 5


@pytest.mark.parametrize("p,q,ok", [(5, 13, True), (13, 17, False), (5, 7, False), (5, 5, False), (9, 13, False)])
def test_theorem3(p, q, ok):
    assert check_theorem3(p, q) is ok


def test_theorem3_symmetric():
    primes = [p for p in odd_primes_below(500) if p % 4 == 1]
    for p in primes:
        for q in primes:
            assert check_theorem3(p, q) == check_theorem3(q, p)


@pytest.mark.parametrize("p,q,ok", [(17, 5, True), (5, 17, False), (41, 5, False), (17, 13, False), (73, 5, True)])
def test_theorem4(p, q, ok):
    assert check_theorem4(p, q) is ok


def test_generate_pairs_examples():
    assert (17, 5) in generate_theorem1_pairs(100, 1)
    assert generate_theorem1_pairs(10, 1) == []
    assert (73, 85) in generate_theorem1_pairs(7000, 3)
    with pytest.raises(BadFamily):
        generate_theorem1_pairs(100, 5)


def _shape(s1, s2):
    f1 = [p for p, _ in naive_factor(s1)]
    f2 = [p for p, _ in naive_factor(s2)]
    return f1, f2


@pytest.mark.parametrize("family", [1, 2, 3, 4])
def test_generated_pairs_shape_and_order(family):
    limit = 400_000 if family == 4 else 20_000
    pairs = generate_theorem1_pairs(limit, family)
    assert pairs, "expected some instances at this limit"
    assert pairs == sorted(pairs, key=lambda c: (c[0] * c[1], c[0]))
    for s1, s2 in pairs:
        assert s1 * s2 <= limit
        assert check_theorem1(s1, s2).satisfied
        f1, f2 = _shape(s1, s2)
        if family == 1:
            assert len(f1) == len(f2) == 1 and s1 % 8 == 1 and s2 % 8 == 5
            assert check_theorem4(s1, s2)
        elif family == 2:
            assert len(f1) == 2 and len(f2) == 1 and all(p % 8 == 1 for p in f1)
            assert sorted(legendre(p, s2) for p in f1) == [-1, 1]
        elif family == 3:
            assert len(f1) == 1 and sorted(p % 8 for p in f2) == [1, 5]
            assert all(legendre(s1, p) == -1 for p in f2)
        else:
            assert len(f1) >= 3 and len(f1) % 2 == 1 and len(f2) == 1
            residues = [p for p in f1 if legendre(p, s2) == 1]
            assert len(residues) % 2 == 0


def test_family1_is_exhaustive():
    primes = odd_primes_below(2000)
    expected = sorted(
        ((a, b) for a in primes for b in primes
         if a % 8 == 1 and b % 8 == 5 and a * b <= 2000 and legendre(a, b) == -1),
        key=lambda c: (c[0] * c[1], c[0]),
    )
    assert generate_theorem1_pairs(2000, 1) == expected


def test_generate_moduli():
    assert [n.value for n in generate_theorem2_moduli(30)] == [5, 13, 29]
    assert generate_theorem2_moduli(1) == []
    values = [n.value for n in generate_theorem2_moduli(100)]
    assert 85 in values and 65 not in values


def test_generate_moduli_matches_full_scan():
    expected = [n for n in odd_squarefree_upto(3000) if check_theorem2(n).satisfied]
    assert [n.value for n in generate_theorem2_moduli(3000)] == expected
