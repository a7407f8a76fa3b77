"""Bounded exhaustive searches with reproducible certificates.

Two equations are scanned over 1 <= x, y <= bound, x-major:

    EQ1:   (s1*x^2)^2 + (s2*y^2)^2 = z^2          gcd(s1*x, s2*y) = 1
    EQ19:  d1*z^2 = d2^2*x^4 + d3^2*y^4            gcd(d2*x, d3*y) = 1

Work is split into contiguous x-blocks, one per worker process, and the
blocks are merged in x order, so the certificate (outcome, witness,
scanned) does not depend on the worker count.  ``scanned`` is the number
of pairs in the whole box that pass the gcd condition.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Union

from .arith import OddSquarefree

EXHAUSTED = "exhausted"
COUNTEREXAMPLE = "counterexample"

_SQ64 = frozenset(i * i % 64 for i in range(64))
_SQ63 = frozenset(i * i % 63 for i in range(63))


def square_root_if_square(v: int) -> Optional[int]:
    """sqrt(v) when v is a perfect square, else None (residue prefilter first)."""
    if v & 63 not in _SQ64 or v % 63 not in _SQ63:
        return None
    r = math.isqrt(v)
    return r if r * r == v else None


@dataclass(frozen=True)
class SearchCertificate:
    equation: str
    params: tuple[int, ...]
    bound: int
    outcome: str
    witness: Optional[tuple[int, int, int]]
    scanned: int
    elapsed_ms: float
    workers: int

    @property
    def exhausted(self) -> bool:
        return self.outcome == EXHAUSTED

    def to_record(self) -> dict:
        rec = {
            "equation": self.equation,
            "params": [str(p) for p in self.params],
            "bound": str(self.bound),
            "outcome": self.outcome,
        }
        if self.witness is not None:
            rec["witness"] = [str(v) for v in self.witness]
        rec["scanned"] = self.scanned
        rec["elapsed_ms"] = self.elapsed_ms
        rec["workers"] = self.workers
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "SearchCertificate":
        witness = rec.get("witness")
        return cls(
            equation=rec["equation"],
            params=tuple(int(p) for p in rec["params"]),
            bound=int(rec["bound"]),
            outcome=rec["outcome"],
            witness=tuple(int(v) for v in witness) if witness else None,
            scanned=int(rec["scanned"]),
            elapsed_ms=float(rec["elapsed_ms"]),
            workers=int(rec["workers"]),
        )

    def replay(self) -> bool:
        """Check a counterexample by substitution (trivially true when exhausted)."""
        if self.witness is None:
            return self.outcome == EXHAUSTED
        x, y, z = self.witness
        if self.equation == "EQ1":
            s1, s2 = self.params
            return (s1 * x * x) ** 2 + (s2 * y * y) ** 2 == z * z and math.gcd(s1 * x, s2 * y) == 1
        d1, d2, d3 = self.params
        return d1 * z * z == d2 * d2 * x**4 + d3 * d3 * y**4 and math.gcd(d2 * x, d3 * y) == 1


def _scan_eq1(s1: int, s2: int, x_lo: int, x_hi: int, bound: int):
    count, witness = 0, None
    for x in range(x_lo, x_hi):
        a = s1 * x
        leg = (a * x) ** 2
        for y in range(1, bound + 1):
            if math.gcd(a, s2 * y) != 1:
                continue
            count += 1
            if witness is None:
                z = square_root_if_square(leg + (s2 * y * y) ** 2)
                if z is not None:
                    witness = (x, y, z)
    return count, witness


def _scan_eq19(d1: int, d2: int, d3: int, x_lo: int, x_hi: int, bound: int):
    count, witness = 0, None
    for x in range(x_lo, x_hi):
        a = d2 * x
        left = a * a * x * x
        for y in range(1, bound + 1):
            if math.gcd(a, d3 * y) != 1:
                continue
            count += 1
            if witness is None:
                total = left + (d3 * y * y) ** 2
                if total % d1 == 0:
                    z = square_root_if_square(total // d1)
                    if z is not None:
                        witness = (x, y, z)
    return count, witness


def _blocks(bound: int, workers: int) -> list[tuple[int, int]]:
    workers = max(1, min(workers, bound))
    step, extra = divmod(bound, workers)
    out, lo = [], 1
    for i in range(workers):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def _run(kernel, head: tuple[int, ...], bound: int, workers: int):
    blocks = _blocks(bound, workers)
    if len(blocks) == 1:
        results = [kernel(*head, 1, bound + 1, bound)]
    else:
        with ProcessPoolExecutor(max_workers=len(blocks)) as pool:
            futures = [pool.submit(kernel, *head, lo, hi, bound) for lo, hi in blocks]
            results = [f.result() for f in futures]
    scanned = sum(c for c, _ in results)
    # blocks are in increasing x, so the first hit is the least witness
    witness = next((w for _, w in results if w is not None), None)
    return scanned, witness


def _certificate(equation, params, bound, workers, kernel) -> SearchCertificate:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    start = time.perf_counter()
    scanned, witness = _run(kernel, params, bound, workers)
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    return SearchCertificate(
        equation=equation,
        params=params,
        bound=bound,
        outcome=EXHAUSTED if witness is None else COUNTEREXAMPLE,
        witness=witness,
        scanned=scanned,
        elapsed_ms=elapsed,
        workers=workers,
    )


def search_eq1(
    s1: Union[int, OddSquarefree],
    s2: Union[int, OddSquarefree],
    bound: int,
    workers: int = 1,
) -> SearchCertificate:
    params = (OddSquarefree.of(s1).value, OddSquarefree.of(s2).value)
    return _certificate("EQ1", params, bound, workers, _scan_eq1)


def search_eq19(
    d1: Union[int, OddSquarefree],
    d2: Union[int, OddSquarefree],
    d3: Union[int, OddSquarefree],
    bound: int,
    workers: int = 1,
) -> SearchCertificate:
    params = tuple(OddSquarefree.of(d).value for d in (d1, d2, d3))
    return _certificate("EQ19", params, bound, workers, _scan_eq19)
