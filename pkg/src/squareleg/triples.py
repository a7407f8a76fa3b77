"""Primitive Pythagorean triples and the leg-difference representation.

A primitive triple is ``(m*m - n*n, 2*m*n, m*m + n*n)`` for coprime
``m > n`` of opposite parity.  The odd leg ``m*m - n*n`` can always be
written ``s * x**2`` with ``x = k*m1*n1`` and

    m = k*(d1*m1**2 + d2*n1**2)/2,    n = k*|d1*m1**2 - d2*n1**2|/2,

where ``d1*d2 = s`` and ``k`` is 1 or 2; ``decompose_leg_difference``
produces that representation from ``(m, n)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import isqrt, squarefree_part
from .errors import BadParams


@dataclass(frozen=True)
class PrimitiveTriple:
    a: int  # odd leg
    b: int  # even leg
    c: int
    m: int
    n: int

    def as_tuple(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c


@dataclass(frozen=True)
class DicksonDecomposition:
    m: int
    n: int
    s: int
    x: int
    k: int
    d1: int
    d2: int
    m1: int
    n1: int

    @property
    def even_kernel(self) -> bool:
        """Set when m, n are both odd and d1 or d2 picks up the factor 2."""
        return self.s % 2 == 0

    def check(self) -> bool:
        """Substitute back into every defining identity."""
        m, n, k = self.m, self.n, self.k
        p, q = self.d1 * self.m1**2, self.d2 * self.n1**2
        return (
            self.s * self.x**2 == m * m - n * n
            and self.x == k * self.m1 * self.n1
            and self.d1 * self.d2 == self.s
            and math.gcd(self.m1, self.n1) == 1
            and k in (1, 2)
            and 2 * m == k * (p + q)
            and 2 * n == k * abs(p - q)
        )


def _check_params(m: int, n: int, need_opposite_parity: bool) -> None:
    if not (m > n >= 1):
        raise BadParams(f"need m > n >= 1, got m={m}, n={n}")
    if math.gcd(m, n) != 1:
        raise BadParams(f"m={m} and n={n} are not coprime")
    if need_opposite_parity and (m + n) % 2 == 0:
        raise BadParams(f"m={m} and n={n} have the same parity")


def triple_from_params(m: int, n: int) -> PrimitiveTriple:
    _check_params(m, n, need_opposite_parity=True)
    return PrimitiveTriple(m * m - n * n, 2 * m * n, m * m + n * n, m, n)


def generate_primitive_triples(c_max: int) -> list[PrimitiveTriple]:
    """All primitive triples with hypotenuse <= c_max, sorted by (c, a)."""
    out = []
    m = 2
    while m * m + 1 <= c_max:
        for n in range(1 + m % 2, m, 2):
            if m * m + n * n > c_max:
                break
            if math.gcd(m, n) == 1:
                out.append(triple_from_params(m, n))
        m += 1
    out.sort(key=lambda t: (t.c, t.a))
    return out


def decompose_leg_difference(m: int, n: int) -> DicksonDecomposition:
    _check_params(m, n, need_opposite_parity=False)
    k = math.gcd(m + n, m - n)
    big, small = (m + n) // k, (m - n) // k
    d1, m1 = squarefree_part(big)
    d2, n1 = squarefree_part(small)
    s, _ = squarefree_part(m * m - n * n)
    x, exact = isqrt((m * m - n * n) // s)
    if not exact or s != d1 * d2:
        # big and small are coprime, so this cannot happen
        raise AssertionError(f"inconsistent kernel for m={m}, n={n}")
    return DicksonDecomposition(m=m, n=n, s=s, x=x, k=k, d1=d1, d2=d2, m1=m1, n1=n1)
