"""Hypothesis checkers for the four theorems and generators of instances.

Theorem 1 concerns pairs (s1, s2): both odd squarefree, s1*s2 a product
of one prime = 5 (mod 8) and primes = 1 (mod 8), and the factor that is
= 1 (mod 8) a nonresidue modulo every divisor > 1 of the other.
Theorem 2 concerns odd squarefree n all of whose splits n = s1*s2 have
residues {1, 5} mod 8.  Theorems 3 and 4 are about prime pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Union

from .arith import (
    OddSquarefree,
    factorize,
    is_prime,
    is_qr_mod_odd_squarefree,
    legendre,
    primes_up_to,
)
from .errors import BadFamily, NotOddSquarefree

IntOrOSF = Union[int, OddSquarefree]


@dataclass(frozen=True)
class Theorem1Report:
    s1: int
    s2: int
    cond_a: bool
    cond_b: bool
    cond_c: bool
    witness: Optional[int] = None

    @property
    def satisfied(self) -> bool:
        return self.cond_a and self.cond_b and self.cond_c


@dataclass(frozen=True)
class Split:
    s1: int
    s2: int

    @property
    def residues(self) -> tuple[int, int]:
        return self.s1 % 8, self.s2 % 8

    @property
    def ok(self) -> bool:
        return sorted(self.residues) == [1, 5]


@dataclass(frozen=True)
class Theorem2Report:
    n: OddSquarefree
    splits: tuple[Split, ...] = field(default=())

    @property
    def satisfied(self) -> bool:
        return all(sp.ok for sp in self.splits)


def _try_osf(v: IntOrOSF) -> Optional[OddSquarefree]:
    try:
        return OddSquarefree.of(v)
    except NotOddSquarefree:
        return None


def _condition_b(s1: int, s2: int) -> bool:
    if s1 <= 1 or s2 <= 1 or math.gcd(s1, s2) != 1:
        return False
    fac = factorize(s1 * s2)
    if len(fac) < 2 or any(e != 1 for _, e in fac):
        return False
    residues = sorted(p % 8 for p, _ in fac)
    return residues.count(5) == 1 and residues.count(1) == len(residues) - 1


def _nonresidue_witness(s: int, other: OddSquarefree) -> Optional[int]:
    """First divisor d > 1 of ``other`` modulo which s is a residue."""
    for d in other.divisors()[1:]:
        if is_qr_mod_odd_squarefree(s, other.sub(d)):
            return d
    return None


def check_theorem1(s1: IntOrOSF, s2: IntOrOSF) -> Theorem1Report:
    a1, a2 = _try_osf(s1), _try_osf(s2)
    v1, v2 = int(s1), int(s2)
    cond_a = a1 is not None and a2 is not None
    cond_b = _condition_b(v1, v2)
    cond_c = False
    witness = None
    # condition (c) only makes sense for coprime odd squarefree inputs
    if cond_a and math.gcd(v1, v2) == 1:
        cond_c = True
        for s, other in ((v1, a2), (v2, a1)):
            if s % 8 == 1 and other.value > 1:
                witness = _nonresidue_witness(s, other)
                if witness is not None:
                    cond_c = False
                    break
    return Theorem1Report(v1, v2, cond_a, cond_b, cond_c, witness)


def theorem2_splits(n: OddSquarefree) -> tuple[Split, ...]:
    """Unordered splits n = s1*s2 with s1 < s2 (just (1, 1) for n = 1)."""
    return tuple(Split(a, b) for a, b in n.ordered_splits() if a <= b)


def check_theorem2(n: IntOrOSF) -> Theorem2Report:
    n = OddSquarefree.of(n)
    return Theorem2Report(n, theorem2_splits(n))


def characterize_theorem2(n: IntOrOSF) -> bool:
    n = OddSquarefree.of(n)
    residues = [p % 8 for p in n.factors]
    return all(r in (1, 5) for r in residues) and residues.count(5) % 2 == 1


def check_theorem3(p: int, q: int) -> bool:
    return (
        p != q
        and is_prime(p)
        and is_prime(q)
        and p % 4 == 1
        and q % 4 == 1
        and legendre(p, q) == -1
    )


def check_theorem4(p: int, q: int) -> bool:
    return (
        p != q
        and is_prime(p)
        and is_prime(q)
        and p % 8 == 1
        and q % 8 == 5
        and legendre(p, q) == -1
    )


def _prime_products(pool: list[int], count: int, limit: int) -> list[int]:
    out = []

    def rec(start: int, left: int, acc: int) -> None:
        if left == 0:
            out.append(acc)
            return
        for i in range(start, len(pool)):
            if acc * pool[i] ** left > limit:
                break
            rec(i + 1, left - 1, acc * pool[i])

    rec(0, count, 1)
    return out


def generate_theorem1_pairs(limit: int, family: int) -> list[tuple[int, int]]:
    """Pairs (s1, s2) with s1*s2 <= limit of the given example family.

    1: s1, s2 primes, s1 = 1, s2 = 5 (mod 8)
    2: s1 = p1*p2 with p1, p2 = 1 (mod 8), s2 prime
    3: s1 prime = 1 (mod 8), s2 = p1*p2 with p1 = 1, p2 = 5 (mod 8)
    4: s1 a product of an odd number >= 3 of primes = 1 (mod 8), s2 prime = 5 (mod 8)

    Only pairs passing ``check_theorem1`` are kept; sorted by (s1*s2, s1).
    """
    if family not in (1, 2, 3, 4):
        raise BadFamily(f"family must be 1..4, got {family}")
    if limit < 15:
        return []
    primes = primes_up_to(limit // 5)
    ones = [p for p in primes if p % 8 == 1]
    fives = [p for p in primes if p % 8 == 5]

    candidates: list[tuple[int, int]] = []
    if family == 1:
        candidates = [(a, b) for a in ones for b in fives if a * b <= limit]
    elif family == 2:
        for s1 in _prime_products(ones, 2, limit // 5):
            candidates += [(s1, b) for b in fives if s1 * b <= limit]
    elif family == 3:
        for a, b in ((a, b) for a in ones for b in fives if a * b <= limit // 17):
            candidates += [(s1, a * b) for s1 in ones if s1 != a and s1 * a * b <= limit]
    else:
        k = 3
        while True:
            products = _prime_products(ones, k, limit // 5)
            if not products:
                break
            for s1 in products:
                candidates += [(s1, b) for b in fives if s1 * b <= limit]
            k += 2

    pairs = [c for c in candidates if check_theorem1(*c).satisfied]
    pairs.sort(key=lambda c: (c[0] * c[1], c[0]))
    return pairs


def generate_theorem2_moduli(limit: int) -> list[OddSquarefree]:
    out = []
    for v in range(5, limit + 1, 8):  # qualifying moduli are all = 5 (mod 8)
        n = _try_osf(v)
        if n is not None and check_theorem2(n).satisfied:
            out.append(n)
    return out
