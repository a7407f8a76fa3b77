"""Exact integer primitives: gcd, integer square roots, factorization,
squarefree kernels, Legendre/Jacobi symbols and quadratic residuosity
modulo odd squarefree numbers.

Plain Python ints serve as the natural-number type throughout; they are
arbitrary precision, so nothing here can wrap or truncate.
"""

from __future__ import annotations

import bisect
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Union

from .errors import EvenModulus, NotCoprime, NotOddPrime, NotOddSquarefree, ZeroInput

TRIAL_LIMIT = 10**6

# Miller-Rabin with these bases is deterministic below 3.3e24 (covers 64 bits).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def isqrt(a: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(a)), a is a perfect square)``."""
    if a < 0:
        raise ValueError("isqrt of a negative number")
    r = math.isqrt(a)
    return r, r * r == a


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_LIMIT + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(TRIAL_LIMIT) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, TRIAL_LIMIT + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit (limit may exceed the trial table)."""
    if limit <= TRIAL_LIMIT:
        table = _small_primes()
        return list(table[: bisect.bisect_right(table, limit)])
    return [p for p in range(2, limit + 1) if is_prime(p)]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of the odd composite n."""
    rng = random.Random(n)  # seeded by n so factorize stays deterministic
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split_large(d, out)
    _split_large(n // d, out)


def factorize(a: int) -> list[tuple[int, int]]:
    """Prime factorization as ``[(p, e), ...]`` with p increasing.

    Trial division by the primes below 10**6, then Pollard-Brent on
    whatever cofactor is left.
    """
    if a == 0:
        raise ZeroInput("cannot factor 0")
    if a < 0:
        raise ValueError("factorize expects a natural number")
    found: dict[int, int] = {}
    for p in _small_primes():
        if p * p > a:
            break
        if a % p == 0:
            e = 0
            while a % p == 0:
                a //= p
                e += 1
            found[p] = e
    _split_large(a, found)
    return sorted(found.items())


def squarefree_part(a: int) -> tuple[int, int]:
    """Write ``a = s * f**2`` with s squarefree; return ``(s, f)``."""
    if a == 0:
        raise ZeroInput("squarefree part of 0 is undefined")
    s = f = 1
    for p, e in factorize(a):
        if e % 2:
            s *= p
        f *= p ** (e // 2)
    return s, f


def is_squarefree(a: int) -> bool:
    return a >= 1 and all(e == 1 for _, e in factorize(a))


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) by Euler's criterion."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def jacobi(a: int, m: int) -> int:
    if m < 1 or m % 2 == 0:
        raise EvenModulus(f"Jacobi symbol needs an odd positive modulus, got {m}")
    a %= m
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


@dataclass(frozen=True)
class OddSquarefree:
    """A validated odd squarefree positive integer and its prime factors."""

    value: int
    factors: tuple[int, ...]

    def __post_init__(self):
        if self.value < 1 or self.value % 2 == 0:
            raise NotOddSquarefree(f"{self.value} is not an odd positive integer")
        if len(set(self.factors)) != len(self.factors) or math.prod(self.factors) != self.value:
            raise NotOddSquarefree(f"factors {self.factors} do not multiply out to {self.value}")

    @classmethod
    def of(cls, value: Union[int, "OddSquarefree"]) -> "OddSquarefree":
        if isinstance(value, OddSquarefree):
            return value
        value = int(value)
        if value < 1 or value % 2 == 0:
            raise NotOddSquarefree(f"{value} is not odd and positive")
        fac = factorize(value)
        if any(e > 1 for _, e in fac):
            raise NotOddSquarefree(f"{value} is not squarefree")
        return cls(value, tuple(p for p, _ in fac))

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    @property
    def mod8(self) -> int:
        return self.value % 8

    @property
    def omega(self) -> int:
        return len(self.factors)

    def divisors(self) -> list[int]:
        """All positive divisors, ascending."""
        out = []
        for k in range(len(self.factors) + 1):
            for combo in combinations(self.factors, k):
                out.append(math.prod(combo))
        return sorted(out)

    def sub(self, d: int) -> "OddSquarefree":
        """The divisor d as a validated value (factors taken from ours)."""
        if self.value % d:
            raise ValueError(f"{d} does not divide {self.value}")
        return OddSquarefree(d, tuple(p for p in self.factors if d % p == 0))

    def ordered_splits(self) -> Iterator[tuple[int, int]]:
        """Every ``(a, b)`` with ``a * b == value``, a ascending."""
        for d in self.divisors():
            yield d, self.value // d

    def __str__(self) -> str:
        return str(self.value)


def is_qr_mod_odd_squarefree(a: int, m: Union[int, OddSquarefree]) -> bool:
    """True iff a is a quadratic residue modulo every prime factor of m.

    For composite m this is genuine residuosity, which a Jacobi symbol of
    +1 does not certify.
    """
    m = OddSquarefree.of(m)
    if math.gcd(a, m.value) != 1:
        raise NotCoprime(f"gcd({a}, {m.value}) != 1")
    return all(legendre(a, p) == 1 for p in m.factors)
