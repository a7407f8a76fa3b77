"""Mechanized case analyses for Theorems 1-3.

Every proof branch becomes a row.  A row is refuted either because its
congruences have no solution modulo 8 (checked by exhausting residues of
the unknowns, odd unknowns over {1, 3, 5, 7}, free ones over 0..7) or
because it forces a quadratic residue that the Legendre symbols deny.
Rows that survive both tests are OPEN.

The deductions modulo a divisor assume the unknowns are prime to that
divisor, as the hand proofs do.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Optional, Sequence, Union

from .arith import OddSquarefree, is_prime, is_qr_mod_odd_squarefree, legendre
from .errors import BadModulus, BadPrimes, NotCoprime, NotOddSquarefree
from .hypotheses import theorem2_splits

ODD = (1, 3, 5, 7)
ANY = tuple(range(8))
SIGNS = (1, -1)


class Refutation(str, enum.Enum):
    MOD8 = "MOD8"
    QR_SUBMODULUS = "QR_SUBMODULUS"
    QR_FULL = "QR_FULL"
    OPEN = "OPEN"


@dataclass(frozen=True)
class CaseRow:
    case_id: str
    split: Optional[tuple[int, int]]
    deltas: Optional[tuple[int, int]]
    refutation: Refutation
    detail: str

    @property
    def refuted(self) -> bool:
        return self.refutation is not Refutation.OPEN


@dataclass(frozen=True)
class CaseAuditReport:
    theorem: str
    rows: tuple[CaseRow, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def all_refuted(self) -> bool:
        return all(r.refuted for r in self.rows)

    def count(self, kind: Refutation) -> int:
        return sum(r.refutation is kind for r in self.rows)


def mod8_satisfiable(
    constraint: Callable[..., bool], domains: dict[str, Sequence[int]]
) -> bool:
    """Does some assignment of residues mod 8 satisfy ``constraint``?"""
    names = list(domains)
    for values in product(*(domains[k] for k in names)):
        if constraint(**dict(zip(names, values))):
            return True
    return False


_THEOREM1_TEXT = {
    "EQ4": "2*d2'*N^2 = ±(d1*m1^2 - d2*n1^2), 4*d1'*M^2 = d1*m1^2 + d2*n1^2",
    "EQ5": "4*d2'*N^2 = ±(d1*m1^2 - d2*n1^2), 2*d1'*M^2 = d1*m1^2 + d2*n1^2",
}


@lru_cache(maxsize=None)
def _theorem1_mod8(sub: str, d1: int, d2: int, e1: int, e2: int) -> bool:
    """Is the subcase solvable mod 8?  Only the residues of the divisors matter.

    EQ4: m = 2*e1*M^2, n = e2*N^2 (N odd).  EQ5: m = e1*M^2, n = 2*e2*N^2 (M odd).
    In both, m1 and n1 are odd.
    """
    if sub == "EQ4":
        doms = {"m1": ODD, "n1": ODD, "N": ODD, "M": ANY}
        c_n, c_m = 2, 4
    else:
        doms = {"m1": ODD, "n1": ODD, "N": ANY, "M": ODD}
        c_n, c_m = 4, 2

    def eqs(sign, m1, n1, N, M):
        a, b = d1 * m1 * m1, d2 * n1 * n1
        return (c_n * e2 * N * N - sign * (a - b)) % 8 == 0 and (c_m * e1 * M * M - (a + b)) % 8 == 0

    return any(
        mod8_satisfiable(lambda sign=sign, **kw: eqs(sign, **kw), doms) for sign in SIGNS
    )


def _theorem1_rows(odd: OddSquarefree, even: OddSquarefree, parity: str) -> list[CaseRow]:
    """Rows for odd*X**2 = m**2 - n**2, even*Y**2 = 2*m*n."""
    rows = []
    s = odd.value
    for d1, d2 in odd.ordered_splits():
        for e1, e2 in even.ordered_splits():
            for sub in ("EQ4", "EQ5"):
                case_id = f"{parity}/{sub}"
                sat = _theorem1_mod8(sub, d1 % 8, d2 % 8, e1 % 8, e2 % 8)
                text = _THEOREM1_TEXT[sub]
                if not sat:
                    rows.append(CaseRow(case_id, (d1, d2), (e1, e2), Refutation.MOD8,
                                        f"{text} has no solution mod 8 for either sign"))
                    continue
                try:
                    if e2 > 1:
                        if not is_qr_mod_odd_squarefree(s, even.sub(e2)):
                            rows.append(CaseRow(case_id, (d1, d2), (e1, e2), Refutation.QR_SUBMODULUS,
                                                f"needs {s} to be a residue mod {e2}; it is not"))
                            continue
                    elif even.value > 1:
                        if not is_qr_mod_odd_squarefree(-s % even.value, even):
                            rows.append(CaseRow(case_id, (d1, d2), (e1, e2), Refutation.QR_FULL,
                                                f"needs -{s} to be a residue mod {even.value}; it is not"))
                            continue
                    detail = "consistent mod 8 and with every residue symbol checked"
                except NotCoprime:
                    detail = "consistent mod 8; residue deduction unavailable (moduli share a factor)"
                rows.append(CaseRow(case_id, (d1, d2), (e1, e2), Refutation.OPEN, detail))
    return rows


def audit_theorem1(
    s1: Union[int, OddSquarefree],
    s2: Union[int, OddSquarefree],
    parities: Sequence[str] = ("x_odd", "x_even"),
) -> CaseAuditReport:
    """Rows for every ordered split d1*d2 of the odd-leg multiplier, every
    ordered split d1'*d2' of the even-leg multiplier, and both subcases
    (m even / n even).  ``x_odd`` puts s1 on the odd leg; ``x_even`` is the
    same analysis with the roles of s1 and s2 exchanged.
    """
    s1, s2 = OddSquarefree.of(s1), OddSquarefree.of(s2)
    rows: list[CaseRow] = []
    for parity in parities:
        if parity == "x_odd":
            rows += _theorem1_rows(s1, s2, parity)
        elif parity == "x_even":
            rows += _theorem1_rows(s2, s1, parity)
        else:
            raise ValueError(f"unknown parity case {parity!r}")
    return CaseAuditReport("t1", tuple(rows))


def audit_theorem2_case1(n: Union[int, OddSquarefree]) -> CaseAuditReport:
    """Case x odd, y even of (n*x^2)^2 + y^4 = z^2, with r, t the generators
    of the primitive triple: branch r = 2R^2, t = T^2 and, per split
    n = s1*s2, branch r = R^2, t = 2T^2.
    """
    v = int(n)
    if v < 3 or v % 2 == 0:
        raise BadModulus(f"need an odd modulus >= 3, got {v}")
    try:
        n = OddSquarefree.of(v)
    except NotOddSquarefree as exc:
        raise BadModulus(str(exc)) from None

    rows = []
    sat = mod8_satisfiable(
        lambda x, T, R: (v * x * x - (4 * R**4 - T**4)) % 8 == 0,
        {"x": ODD, "T": ODD, "R": ANY},
    )
    rows.append(CaseRow(
        "r=2R^2", None, None,
        Refutation.OPEN if sat else Refutation.MOD8,
        f"n*x^2 = 4R^4 - T^4 mod 8 with n = {v % 8} mod 8: " + ("solvable" if sat else "no solution"),
    ))

    notes = []
    for sp in theorem2_splits(n):
        a, b = sp.s1, sp.s2
        sat = mod8_satisfiable(
            lambda R, R1, T1: (2 * R * R - (a * R1 * R1 + b * T1 * T1)) % 8 == 0,
            {"R": ODD, "R1": ODD, "T1": ODD},
        )
        rows.append(CaseRow(
            "r=R^2", (a, b), None,
            Refutation.OPEN if sat else Refutation.MOD8,
            f"2R^2 = s1*R1^2 + s2*T1^2 mod 8 needs s1 + s2 = 2, have {(a + b) % 8}",
        ))
        t_sat = any(
            mod8_satisfiable(
                lambda T, R1, T1, sign=sign: (4 * T * T - sign * (a * R1 * R1 - b * T1 * T1)) % 8 == 0,
                {"T": ANY, "R1": ODD, "T1": ODD},
            )
            for sign in SIGNS
        )
        notes.append(
            f"split ({a}, {b}): 4T^2 = ±(s1*R1^2 - s2*T1^2) mod 8 is "
            + ("consistent" if t_sat else "inconsistent")
        )
    return CaseAuditReport("t2", tuple(rows), tuple(notes))


def audit_theorem3(p: int, q: int) -> CaseAuditReport:
    """Both branches m = q*m1^2 / n = q*n1^2 reduce mod q to p (or -p) being
    a square."""
    p, q = int(p), int(q)
    if not (p != q and is_prime(p) and is_prime(q) and p % 4 == 1 and q % 4 == 1):
        raise BadPrimes(f"need distinct primes = 1 (mod 4), got {p}, {q}")
    rows = []
    for case_id, a, what in (
        ("m=q*m1^2", -p, f"p*x^2 = -n^2 mod {q} makes -{p} a residue"),
        ("n=2q*n1^2", p, f"p*x^2 = m^2 mod {q} makes {p} a residue"),
    ):
        symbol = legendre(a, q)
        rows.append(CaseRow(
            case_id, None, None,
            Refutation.QR_SUBMODULUS if symbol == -1 else Refutation.OPEN,
            f"{what}; Legendre symbol is {symbol}",
        ))
    return CaseAuditReport("t3", tuple(rows))
