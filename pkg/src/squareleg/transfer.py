"""Moving solutions between

    (n*x^2)^2 + y^4 = z^2,   gcd(n*x, y) = 1                (quartic)
    d1*w^2 = d2^2*u^4 + d3^2*v^4,  gcd(d2*u, d3*v) = 1       (reduced)

with n = d1*d2*d3.  ``lift`` builds a quartic solution from a reduced
one, ``decompose`` recovers the reduced one (x even only), and
``descent_step`` turns a decomposition with d2 = n or d3 = n into a
strictly smaller quartic solution for the same n.

The chain behind both directions, with r, t the generators of the
primitive triple (n*x^2, y^2, z):

    n*x^2 = 2*r*t,  y^2 = r^2 - t^2,  z = r^2 + t^2,
    r = d1*w^2 = R1^2 + T1^2,  t = 2*R1*T1,  R1 = d2*u^2,  T1 = d3*v^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .arith import OddSquarefree, isqrt, legendre
from .errors import (
    DegenerateY,
    HypothesisNotSatisfied,
    InvalidInput,
    NonPrimitive,
    NotDescentCase,
    NotOddSquarefree,
    ParityUnsupported,
    StructuralViolation,
)
from .hypotheses import check_theorem4


@dataclass(frozen=True)
class QuarticSolution:
    n: int
    x: int
    y: int
    z: int

    def is_valid(self) -> bool:
        n, x, y, z = self.n, self.x, self.y, self.z
        return (
            min(n, x, y, z) >= 1
            and (n * x * x) ** 2 + y**4 == z * z
            and math.gcd(n * x, y) == 1
        )

    def validate(self) -> "QuarticSolution":
        try:
            OddSquarefree.of(self.n)
        except NotOddSquarefree as exc:
            raise InvalidInput(str(exc)) from None
        if not self.is_valid():
            raise InvalidInput(f"not a primitive solution: {self}")
        return self

    def to_record(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("n", "x", "y", "z")}


@dataclass(frozen=True)
class Eq19Solution:
    """d1*w^2 = d2^2*u^4 + d3^2*v^4.

    In the descent argument these divisors appear as d1, d3, d4 and the
    unknowns as R, R2, T2.
    """

    d1: int
    d2: int
    d3: int
    w: int
    u: int
    v: int

    @property
    def n(self) -> int:
        return self.d1 * self.d2 * self.d3

    def is_valid(self) -> bool:
        d1, d2, d3, w, u, v = self.d1, self.d2, self.d3, self.w, self.u, self.v
        return (
            min(d1, d2, d3, w, u, v) >= 1
            and d1 * w * w == d2 * d2 * u**4 + d3 * d3 * v**4
            and math.gcd(d2 * u, d3 * v) == 1
        )

    def validate(self) -> "Eq19Solution":
        try:
            OddSquarefree.of(self.n)
        except NotOddSquarefree as exc:
            raise InvalidInput(f"d1*d2*d3: {exc}") from None
        if not self.is_valid():
            raise InvalidInput(f"not a solution with gcd(d2*u, d3*v) = 1: {self}")
        return self

    def swapped(self) -> "Eq19Solution":
        return Eq19Solution(self.d1, self.d3, self.d2, self.w, self.v, self.u)

    def to_record(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("d1", "d2", "d3", "w", "u", "v")}


@dataclass(frozen=True)
class DecompositionTrace:
    r: int
    t: int
    R1: int
    T1: int
    descent_case: Optional[str]  # None, "d2_equals_n" or "d3_equals_n"


def lift(sol: Eq19Solution) -> QuarticSolution:
    """Trace a reduced solution back to (n*x^2)^2 + y^4 = z^2 with x even.

    The shape of (u, v) is checked before the equation itself.  Neither
    structural error can occur for a genuine solution with odd d's: both
    R1 = d2*u^2 and T1 = d3*v^2 odd would put the right side at 2 (mod 8),
    and R1 == T1 would force d1*w^2 = 2.
    """
    R1, T1 = sol.d2 * sol.u**2, sol.d3 * sol.v**2
    if R1 == T1:
        raise DegenerateY("d2^2*u^4 == d3^2*v^4 gives y = 0")
    if (R1 + T1) % 2 == 0:
        raise NonPrimitive(
            f"d2*u^2 + d3*v^2 = {R1 + T1} is even; the lifted triple would not be primitive"
        )
    sol.validate()
    r, t = R1 * R1 + T1 * T1, 2 * R1 * T1
    out = QuarticSolution(
        n=sol.n,
        x=2 * sol.w * sol.u * sol.v,
        y=abs(R1 * R1 - T1 * T1),
        z=r * r + t * t,
    )
    if not out.is_valid():
        raise InvalidInput(f"lift produced an invalid solution {out}")
    return out


def _exact_sqrt(v: int, what: str) -> int:
    r, exact = isqrt(v)
    if not exact:
        raise StructuralViolation(f"{what} = {v} is not a perfect square")
    return r


def _part(primes: tuple[int, ...], v: int) -> int:
    return math.prod(p for p in primes if v % p == 0)


def decompose(sol: QuarticSolution) -> tuple[Eq19Solution, DecompositionTrace]:
    sol.validate()
    if sol.x % 2:
        raise ParityUnsupported(
            f"x = {sol.x} is odd; only the x even case has a reduced form"
        )
    n = OddSquarefree.of(sol.n)
    y2 = sol.y * sol.y
    r = _exact_sqrt((sol.z + y2) // 2, "(z + y^2)/2")
    t = _exact_sqrt((sol.z - y2) // 2, "(z - y^2)/2")
    d1 = _part(n.factors, r)
    w = _exact_sqrt(r // d1, "r/d1")
    c = _part(n.factors, t)
    if d1 * c != n.value or 2 * r * t != n.value * sol.x**2:
        raise StructuralViolation(f"r = {r}, t = {t} do not split n*x^2 = 2rt")
    R1 = _exact_sqrt((r + sol.y) // 2, "(r + y)/2")
    T1 = _exact_sqrt((r - sol.y) // 2, "(r - y)/2")
    if t != 2 * R1 * T1:
        raise StructuralViolation(f"t = {t} != 2*R1*T1 = {2 * R1 * T1}")
    d2 = _part(n.factors, R1)
    d3 = c // d2
    u = _exact_sqrt(R1 // d2, "R1/d2")
    v = _exact_sqrt(T1 // d3, "T1/d3")
    red = Eq19Solution(d1, d2, d3, w, u, v)
    if not red.is_valid():
        raise StructuralViolation(f"recovered {red} does not satisfy the reduced equation")
    case = None
    if d2 == n.value:
        case = "d2_equals_n"
    elif d3 == n.value:
        case = "d3_equals_n"
    return red, DecompositionTrace(r, t, R1, T1, case)


def descent_step(sol: QuarticSolution) -> QuarticSolution:
    """A smaller solution for the same n, when the reduced form has d2 or d3 equal to n."""
    red, trace = decompose(sol)
    if trace.descent_case == "d2_equals_n":
        # w^2 = n^2*u^4 + v^4
        out = QuarticSolution(sol.n, red.u, red.v, red.w)
    elif trace.descent_case == "d3_equals_n":
        # w^2 = u^4 + n^2*v^4
        out = QuarticSolution(sol.n, red.v, red.u, red.w)
    else:
        raise NotDescentCase(f"reduced divisors {(red.d1, red.d2, red.d3)} give no descent")
    if not out.is_valid() or out.z >= sol.z:
        raise StructuralViolation(f"descent produced {out} from {sol}")
    return out


def descent_chain(sol: QuarticSolution) -> list[QuarticSolution]:
    """Iterate ``descent_step`` until it no longer applies; z strictly decreases."""
    chain = [sol.validate()]
    while True:
        cur = chain[-1]
        if cur.x % 2:
            return chain
        _, trace = decompose(cur)
        if trace.descent_case is None:
            return chain
        chain.append(descent_step(cur))


@dataclass(frozen=True)
class DivisorTriple:
    triple: tuple[int, int, int]
    status: str  # "Admissible" or "Excluded"
    reason: str


def theorem4_divisors(p: int, q: int) -> list[DivisorTriple]:
    """Ordered (d1, d2, d3) with d1*d2*d3 = p*q and d2, d3 < p*q, with the
    verdict the Theorem 4 argument gives for each."""
    p, q = int(p), int(q)
    if not check_theorem4(p, q):
        raise HypothesisNotSatisfied(f"({p}, {q}) fails the Theorem 4 hypothesis")
    n = p * q
    divisors = (1, p, q, n)
    out = []
    for d1 in sorted(divisors, reverse=True):
        for d2 in divisors:
            if (n // d1) % d2:
                continue
            d3 = n // (d1 * d2)
            if d2 >= n or d3 >= n:
                continue
            if d1 == n:
                out.append(DivisorTriple((d1, d2, d3), "Admissible", "Remaining"))
            elif d1 == 1:
                # z^2 = p^2 x^4 + q^2 y^4, impossible by Theorem 3
                out.append(DivisorTriple((d1, d2, d3), "Excluded", "Theorem3"))
            else:
                # e.g. p*z^2 = q^2 x^4 + y^4 forces p to be a residue mod q
                other = q if d1 == p else p
                assert legendre(d1, other) == -1
                out.append(DivisorTriple((d1, d2, d3), "Excluded", "QRContradiction"))
    return out
