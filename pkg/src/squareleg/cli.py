"""Command-line front end.

Every command prints an envelope ``{command, inputs, result, status}``,
as JSON (the stable contract) or as a plain-text table.  Exit codes:
0 ok, 1 violated (hypothesis false, counterexample found, OPEN audit
rows), 2 usage or validation error.  Integers that can grow without bound
are written as decimal strings in both formats.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import arith, caseaudit, hypotheses, search, transfer, triples

OK, VIOLATED, ERROR = "ok", "violated", "error"
EXIT = {OK: 0, VIOLATED: 1, ERROR: 2}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _natural(text: str) -> int:
    try:
        v = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _s(v: int) -> str:
    return str(int(v))


# --- result builders: each returns (result dict, status) ---------------------


def _factor(a):
    fac = arith.factorize(a.n)
    s, f = arith.squarefree_part(a.n)
    root, exact = arith.isqrt(a.n)
    return {
        "n": _s(a.n),
        "factors": [[_s(p), _s(e)] for p, e in fac],
        "squarefree_part": {"s": _s(s), "f": _s(f)},
        "isqrt": {"root": _s(root), "exact": exact},
    }, OK


def _gcd(a):
    return {"gcd": _s(arith.gcd(a.a, a.b))}, OK


def _symbol(a):
    if a.kind == "legendre":
        return {"kind": "legendre", "symbol": arith.legendre(a.a, a.p)}, OK
    return {"kind": "jacobi", "symbol": arith.jacobi(a.a, a.m)}, OK


def _qr(a):
    return {"residue": arith.is_qr_mod_odd_squarefree(a.a, a.m)}, OK


def _triple_record(t):
    return {"a": _s(t.a), "b": _s(t.b), "c": _s(t.c), "m": _s(t.m), "n": _s(t.n)}


def _triples(a):
    if a.m is not None or a.n is not None:
        if a.m is None or a.n is None:
            raise UsageError("triples: give both --m and --n, or --bound")
        return {"triple": _triple_record(triples.triple_from_params(a.m, a.n))}, OK
    if a.bound is None:
        raise UsageError("triples: give --m and --n, or --bound")
    found = triples.generate_primitive_triples(a.bound)
    return {"count": len(found), "triples": [_triple_record(t) for t in found]}, OK


def _dickson(a):
    d = triples.decompose_leg_difference(a.m, a.n)
    rec = {k: _s(getattr(d, k)) for k in ("m", "n", "s", "x", "k", "d1", "d2", "m1", "n1")}
    rec["even_kernel"] = d.even_kernel
    return rec, OK


def _check_t1(a):
    r = hypotheses.check_theorem1(a.s1, a.s2)
    rec = {
        "s1": _s(r.s1), "s2": _s(r.s2),
        "cond_a": r.cond_a, "cond_b": r.cond_b, "cond_c": r.cond_c,
        "satisfied": r.satisfied,
        "witness": None if r.witness is None else _s(r.witness),
    }
    return rec, OK if r.satisfied else VIOLATED


def _check_t2(a):
    r = hypotheses.check_theorem2(a.n)
    rec = {
        "n": _s(r.n.value),
        "splits": [
            {"s1": _s(sp.s1), "s2": _s(sp.s2), "s1_mod8": sp.residues[0],
             "s2_mod8": sp.residues[1], "ok": sp.ok}
            for sp in r.splits
        ],
        "satisfied": r.satisfied,
        "characterization": hypotheses.characterize_theorem2(r.n),
    }
    return rec, OK if r.satisfied else VIOLATED


def _check_t3(a):
    ok = hypotheses.check_theorem3(a.p, a.q)
    return {"p": _s(a.p), "q": _s(a.q), "satisfied": ok}, OK if ok else VIOLATED


def _check_t4(a):
    ok = hypotheses.check_theorem4(a.p, a.q)
    return {"p": _s(a.p), "q": _s(a.q), "satisfied": ok}, OK if ok else VIOLATED


def _gen_t1(a):
    pairs = hypotheses.generate_theorem1_pairs(a.bound, a.family)
    return {"count": len(pairs), "pairs": [[_s(x), _s(y)] for x, y in pairs]}, OK


def _gen_t2(a):
    mods = hypotheses.generate_theorem2_moduli(a.bound)
    return {"count": len(mods), "moduli": [_s(m.value) for m in mods]}, OK


def _audit_record(rep: caseaudit.CaseAuditReport):
    rec = {
        "rows": [
            {
                "case_id": row.case_id,
                "split": None if row.split is None else [_s(v) for v in row.split],
                "deltas": None if row.deltas is None else [_s(v) for v in row.deltas],
                "refutation": row.refutation.value,
                "detail": row.detail,
            }
            for row in rep.rows
        ],
        "all_refuted": rep.all_refuted,
    }
    if rep.notes:
        rec["notes"] = list(rep.notes)
    return rec, OK if rep.all_refuted else VIOLATED


def _audit_t1(a):
    return _audit_record(caseaudit.audit_theorem1(a.s1, a.s2))


def _audit_t2(a):
    return _audit_record(caseaudit.audit_theorem2_case1(a.n))


def _audit_t3(a):
    return _audit_record(caseaudit.audit_theorem3(a.p, a.q))


def _search_eq1(a):
    cert = search.search_eq1(a.s1, a.s2, a.bound, a.workers)
    return cert.to_record(), OK if cert.exhausted else VIOLATED


def _search_eq19(a):
    cert = search.search_eq19(a.d1, a.d2, a.d3, a.bound, a.workers)
    return cert.to_record(), OK if cert.exhausted else VIOLATED


def _quartic(a):
    return transfer.QuarticSolution(a.n, a.x, a.y, a.z)


def _lift(a):
    sol = transfer.Eq19Solution(a.d1, a.d2, a.d3, a.w, a.u, a.v)
    return transfer.lift(sol).to_record(), OK


def _decompose(a):
    red, trace = transfer.decompose(_quartic(a))
    return {
        "solution": red.to_record(),
        "trace": {"r": _s(trace.r), "t": _s(trace.t), "R1": _s(trace.R1),
                  "T1": _s(trace.T1), "descent_case": trace.descent_case},
    }, OK


def _descent(a):
    return transfer.descent_step(_quartic(a)).to_record(), OK


def _t4_divisors(a):
    rows = transfer.theorem4_divisors(a.p, a.q)
    return {
        "triples": [
            {"triple": [_s(v) for v in r.triple], "status": r.status, "reason": r.reason}
            for r in rows
        ]
    }, OK


# --- parser ------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out", metavar="FILE")


def _leaf(sub, name, handler, flags, label=None, **kw):
    p = sub.add_parser(name, **kw)
    for flag in flags:
        required = not flag.endswith("?")
        flag = flag.rstrip("?")
        default = {"workers": 1}.get(flag)
        p.add_argument(f"--{flag}", type=_natural, required=required and default is None,
                       default=default)
    _add_common(p)
    p.set_defaults(handler=handler, label=label or name)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="squareleg", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    _leaf(sub, "factor", _factor, ["n"], help="factorization, squarefree part, isqrt")
    _leaf(sub, "gcd", _gcd, ["a", "b"], help="greatest common divisor")
    sym = sub.add_parser("symbol", help="Legendre or Jacobi symbol")
    sym_sub = sym.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    _leaf(sym_sub, "legendre", _symbol, ["a", "p"], label="symbol legendre")
    _leaf(sym_sub, "jacobi", _symbol, ["a", "m"], label="symbol jacobi")
    _leaf(sub, "qr", _qr, ["a", "m"], help="quadratic residuosity modulo odd squarefree m")
    _leaf(sub, "triples", _triples, ["m?", "n?", "bound?"], help="primitive Pythagorean triples")
    _leaf(sub, "dickson", _dickson, ["m", "n"], help="leg-difference representation of (m, n)")

    groups = {
        "check": [("t1", _check_t1, ["s1", "s2"]), ("t2", _check_t2, ["n"]),
                  ("t3", _check_t3, ["p", "q"]), ("t4", _check_t4, ["p", "q"])],
        "gen": [("t1-pairs", _gen_t1, ["bound", "family"]), ("t2-moduli", _gen_t2, ["bound"])],
        "audit": [("t1", _audit_t1, ["s1", "s2"]), ("t2", _audit_t2, ["n"]),
                  ("t3", _audit_t3, ["p", "q"])],
        "search": [("eq1", _search_eq1, ["s1", "s2", "bound", "workers"]),
                   ("eq19", _search_eq19, ["d1", "d2", "d3", "bound", "workers"])],
    }
    for group, leaves in groups.items():
        g = sub.add_parser(group)
        g_sub = g.add_subparsers(dest="which", required=True, parser_class=_Parser)
        for name, handler, flags in leaves:
            _leaf(g_sub, name, handler, flags, label=f"{group} {name}")

    _leaf(sub, "lift", _lift, ["d1", "d2", "d3", "w", "u", "v"])
    _leaf(sub, "decompose", _decompose, ["n", "x", "y", "z"])
    _leaf(sub, "descent", _descent, ["n", "x", "y", "z"])
    _leaf(sub, "t4-divisors", _t4_divisors, ["p", "q"])
    return parser


_NON_INPUTS = {"cmd", "which", "kind", "handler", "label", "format", "out"}


def render(envelope: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(envelope, indent=2) + "\n"
    return _render_text(envelope)


def _render_text(env: dict) -> str:
    lines = [f"{env['command']}: {env['status']}"]
    if env["inputs"]:
        lines.append("  " + "  ".join(f"{k}={v}" for k, v in env["inputs"].items()))
    lines += _text_block(env["result"], indent=0)
    return "\n".join(lines) + "\n"


def _cell(v: Any) -> str:
    if isinstance(v, list):
        return "(" + ", ".join(_cell(x) for x in v) + ")"
    if isinstance(v, dict):
        return " ".join(f"{k}={_cell(x)}" for k, x in v.items())
    return "-" if v is None else str(v)


def _text_block(result: Any, indent: int) -> list[str]:
    pad = " " * indent
    out = []
    for key, value in result.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            cols = list(value[0])
            cells = [[_cell(row.get(c)) for c in cols] for row in value]
            widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
            out.append(f"{pad}{key}:")
            out.append(pad + "  " + "  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
            for r in cells:
                out.append(pad + "  " + "  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
        elif isinstance(value, dict):
            out.append(f"{pad}{key}:")
            out += _text_block(value, indent + 2)
        else:
            out.append(f"{pad}{key}: {_cell(value)}")
    return out


def _execute(argv: Sequence[str]):
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        return 2, "", str(exc), None
    inputs = {
        k: _s(v) for k, v in vars(args).items() if k not in _NON_INPUTS and v is not None
    }
    try:
        result, status = args.handler(args)
        diagnostic = None
    except (ValueError, UsageError) as exc:  # SquarelegError is a ValueError
        result = {"error": type(exc).__name__, "message": str(exc)}
        status = ERROR
        diagnostic = f"squareleg {args.label}: {type(exc).__name__}: {exc}"
    envelope = {"command": args.label, "inputs": inputs, "result": result, "status": status}
    return EXIT[status], render(envelope, args.format), diagnostic, args.out


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Execute one command and return ``(exit_code, rendered envelope)``."""
    code, output, _, _ = _execute(argv)
    return code, output


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, output, diagnostic, out_path = _execute(sys.argv[1:] if argv is None else argv)
    if diagnostic:
        print(diagnostic, file=sys.stderr)
    if out_path and output:
        with open(out_path, "w") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
