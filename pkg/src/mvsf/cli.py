"""Command-line front end.

Exit codes: 0 success / every verdict holds, 2 some verdict violated,
1 usage or internal error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Optional, Sequence

from . import conjectures, expand, mop, papertables, spherical
from .exactnum import to_text
from .polyalg import PolyMatrix, RatMatrix, render_poly

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATED = 2

WORKERS_ENV = "MVSF_WORKERS"

CHECKS = ("alt-sign", "n01", "hook", "range", "paper-tables", "recurrence", "psi", "lambda")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> tuple[int, int]:
    """``"2..8"`` -> (2, 8); a bare integer is a one-point range."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected A..B") from None
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


# ---------------------------------------------------------------------------
# rendering


def _align(cells: list[list[str]]) -> list[str]:
    widths = [max(len(row[c]) for row in cells) for c in range(len(cells[0]))]
    return ["[ " + "  ".join(s.rjust(w) for s, w in zip(row, widths)) + " ]" for row in cells]


def render_polymatrix(m: PolyMatrix) -> str:
    if m.shape == (1, 1):
        return render_poly(m[0, 0])
    return "\n".join(_align([[render_poly(e) for e in m.row(r)] for r in range(m.rows)]))


def render_ratmatrix(m: RatMatrix) -> str:
    if m.shape == (1, 1):
        return to_text(m[0, 0])
    return "\n".join(_align([[to_text(x) for x in m.row(r)] for r in range(m.rows)]))


def _labelled(label: str, body: str) -> str:
    if "\n" not in body:
        return f"{label}: {body}"
    return f"{label}:\n" + "\n".join("  " + line for line in body.splitlines())


def _dump(obj) -> str:
    return json.dumps(obj, indent=1)


# ---------------------------------------------------------------------------
# family access


def _family(l: int, n: int, wmax: int, family_file: Optional[str] = None) -> spherical.SphericalFamily:
    if family_file:
        fam = spherical.load_family_file(family_file)
        if not fam.normalized:
            raw = fam.members
            fam = spherical.normalize_family(fam.type, raw)
        missing = [w for w in range(wmax + 1) if w not in fam]
        if missing:
            raise UsageError(f"family file lacks members {missing}")
        return fam
    if l > 1:
        raise UsageError(f"closed-form families exist for l <= 1 only; pass --family-file for l={l}")
    return spherical.build_family(n, l, wmax)


# ---------------------------------------------------------------------------
# single-shot commands


def cmd_build(args) -> int:
    if args.family_file:
        fam = spherical.load_family_file(args.family_file)
        if args.w not in fam:
            raise UsageError(f"family file has no member w={args.w}")
        if args.normalized and not fam.normalized:
            fam = spherical.normalize_family(fam.type, fam.members)
        m, l, n, normalized = fam[args.w], fam.l, fam.n, fam.normalized
    else:
        if args.l > 1:
            raise UsageError(f"closed-form families exist for l <= 1 only; pass --family-file for l={args.l}")
        raw = spherical.build_raw(args.n, args.l, args.w)
        m = spherical.normalize_member(raw, args.w) if args.normalized else raw
        l, n, normalized = args.l, args.n, args.normalized
    if args.format == "json":
        print(_dump({"l": l, "n": n, "normalized": normalized, "members": {str(args.w): m.to_json()}}))
    else:
        print(render_polymatrix(m))
    return EXIT_OK


def cmd_linearize(args) -> int:
    i, j = min(args.i, args.j), max(args.i, args.j)
    fam = _family(args.l, args.n, i + j + args.l, args.family_file)
    exp = expand.linearize(fam, i, j)
    if args.format == "json":
        print(_dump(exp.to_json()))
    else:
        print(f"Phi({i})Phi({j}), l={exp.l}, n={exp.n}, k={exp.kmin}..{exp.kmax} ({expand.RANGE_RULE})")
        for k in range(exp.kmin, exp.kmax + 1):
            print(_labelled(f"k={k}", render_ratmatrix(exp.coeffs[k])))
        print(f"residual zero: {exp.residual_zero}")
    return EXIT_OK if exp.residual_zero else EXIT_VIOLATED


def cmd_recurrence(args) -> int:
    fam = _family(args.l, args.n, args.w + 1, args.family_file)
    tri = expand.recurrence(fam, args.w)
    ok = expand.check_recurrence(fam, tri)
    sparse = expand.sparsity_report(tri, fam.l)
    if args.format == "json":
        print(_dump({**tri.to_json(), "l": fam.l, "n": fam.n, "identity_holds": ok,
                     "row_sums": [to_text(x) for x in tri.row_sums()], "sparsity": sparse}))
    else:
        for name, M in (("A", tri.A), ("B", tri.B), ("C", tri.C)):
            print(_labelled(name, render_ratmatrix(M)))
        print(f"identity holds: {ok}")
        print(f"row sums of A+B+C: {', '.join(to_text(x) for x in tri.row_sums())}")
        print(f"sparsity conforms: {sparse['conforms']}"
              + (" (tridiagonal claim vacuous at this size)" if sparse["tridiagonal_vacuous"] else ""))
    return EXIT_OK if ok else EXIT_VIOLATED


def cmd_psi(args) -> int:
    fam = _family(args.l, args.n, args.j, args.family_file)
    psi = mop.build_psi(fam, args.j)
    if args.format == "json":
        print(_dump({"l": fam.l, "n": fam.n, "j": args.j, "psi": psi.to_json()}))
    else:
        print(render_polymatrix(psi))
    return EXIT_OK


def cmd_eigen(args) -> int:
    ev = spherical.eigen_matrices(spherical.SphericalType(args.n, args.l), args.w)
    if args.format == "json":
        print(_dump({"l": args.l, "n": args.n, "w": args.w,
                     "Lambda": [to_text(x) for x in ev.Lambda], "M": [to_text(x) for x in ev.M]}))
    else:
        print(f"Lambda = ({', '.join(to_text(x) for x in ev.Lambda)})")
        print(f"M = ({', '.join(to_text(x) for x in ev.M)})")
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class SweepConfig:
    check: str
    l: int
    n_range: tuple[int, int]
    i_range: tuple[int, int]
    j_max: int
    w_max: int
    fmt: str
    output: Optional[str]
    errata: bool
    family_file: Optional[str]

    def __post_init__(self):
        if self.check not in CHECKS:
            raise UsageError(f"unknown check {self.check!r}")
        if self.check in ("alt-sign", "n01") and self.l != 0:
            raise UsageError(f"--which {self.check} is an l = 0 check")
        if self.check == "n01" and not (0 <= self.n_range[0] and self.n_range[1] <= 1):
            raise UsageError("--which n01 needs n within 0..1")
        if self.check == "paper-tables" and self.family_file:
            raise UsageError("paper tables are compared against the closed-form families")
        if self.n_range[0] < 0:
            raise UsageError("n must be nonnegative")
        if self.i_range[0] < 0 or self.j_max < self.i_range[0]:
            raise UsageError("empty i/j range")

    def cells(self) -> list[tuple[int, int, int]]:
        """(n, a, b): (n, i, j) for product checks, (n, w, 0) for per-w checks, (n, 0, 0) for tables."""
        n_lo, n_hi = self.n_range
        out = []
        for n in range(n_lo, n_hi + 1):
            if self.check in ("paper-tables",):
                out.append((n, 0, 0))
            elif self.check in ("recurrence", "psi", "lambda"):
                out.extend((n, w, 0) for w in range(self.w_max + 1))
            else:
                strict = self.check == "hook"
                for i in range(self.i_range[0], self.i_range[1] + 1):
                    for j in range(i + 1 if strict else i, self.j_max + 1):
                        out.append((n, i, j))
        return out


def run_cell(cfg: SweepConfig, cell: tuple[int, int, int]) -> dict:
    n, a, b = cell
    check = cfg.check
    if check == "lambda":
        return {"check": check, "n": n, "w": a, "holds": spherical.check_lambda_consistency(n, a)}
    if check == "paper-tables":
        out = {"check": check, "n": n, "holds": True, "tables": []}
        for which, tab in papertables.TABLES.items():
            fam = spherical.build_family(n, tab.l, tab.i + tab.j + tab.l)
            exp = expand.linearize(fam, tab.i, tab.j)
            rep = papertables.compare_with_computed(which, n, exp, errata=cfg.errata)
            sums = papertables.table_row_sums(which, n, errata=cfg.errata)
            sums_ok = all(s == tab.l + 1 for s in sums) and \
                all(s == tab.l + 1 for s in exp.total().row_sums())
            holds = rep.ok and sums_ok and exp.residual_zero
            out["holds"] = out["holds"] and holds
            out["tables"].append({
                "which": which, "holds": holds, "row_sums_ok": sums_ok,
                "table_row_sums": [to_text(s) for s in sums],
                "mismatches": [{"k": m.k, "row": m.row, "col": m.col,
                                "table": to_text(m.table), "computed": to_text(m.computed)}
                               for m in rep.mismatches],
            })
        return out
    if check == "recurrence":
        fam = _family(cfg.l, n, a + 1, cfg.family_file)
        tri = expand.recurrence(fam, a)
        ok = expand.check_recurrence(fam, tri) and all(s == 1 for s in tri.row_sums())
        sparse = expand.sparsity_report(tri, fam.l)
        return {"check": check, "n": fam.n, "w": a, "holds": ok and sparse["conforms"],
                "identity_holds": ok, "sparsity": sparse, **tri.to_json()}
    if check == "psi":
        fam = _family(cfg.l, n, a + 1, cfg.family_file)
        psi = mop.build_psi_family(fam, range(0, a + 2))
        tri = expand.recurrence(fam, a)
        base_ok = psi[0] == PolyMatrix.identity(fam.l + 1)
        back_ok = all(psi[j] @ fam[0] == fam[j] for j in psi.members)
        rec_ok = mop.verify_psi_recurrence(psi, tri, a)
        return {"check": check, "n": fam.n, "w": a,
                "holds": base_ok and back_ok and rec_ok,
                "psi_identity_at_0": base_ok, "psi_times_phi0": back_ok,
                "recurrence_transfer": rec_ok, "degrees": psi.degrees}
    i, j = a, b
    fam = _family(cfg.l, n, i + j + cfg.l, cfg.family_file)
    if check == "alt-sign":
        return conjectures.check_alt_sign_l0(fam, i, j).to_json()
    if check == "n01":
        return conjectures.check_n01_facts(fam, i, j).to_json()
    if check == "hook":
        return conjectures.check_hook(fam, i, j).to_json()
    if check == "range":
        return conjectures.check_expansion_range(fam, i, j).to_json()
    raise UsageError(f"unknown check {check!r}")


def _cell_line(res: dict) -> str:
    keys = [k for k in ("n", "i", "j", "w") if k in res]
    head = " ".join(f"{k}={res[k]}" for k in keys)
    line = f"{res['check']} {head}: {'holds' if res['holds'] else 'VIOLATED'}"
    for w in res.get("witnesses", []):
        line += f"\n    witness k={w['k']} ({w['row']},{w['col']}): {w['actual']} " \
                f"expected {w['expected']} [{w['kind']}]"
    for t in res.get("tables", []):
        for m in t["mismatches"]:
            line += f"\n    {t['which']} k={m['k']} ({m['row']},{m['col']}): " \
                    f"table {m['table']} computed {m['computed']}"
        if not t["row_sums_ok"]:
            line += f"\n    {t['which']} table row sums {t['table_row_sums']}"
    return line


def _sort_key(res: dict):
    return tuple(res.get(k, -1) for k in ("n", "i", "j", "w"))


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def run_sweep(cfg: SweepConfig, stream=None, workers: Optional[int] = None) -> list[dict]:
    """Evaluate every cell; each result is written to ``stream`` as it completes.

    The returned list is in canonical (n, i, j, w) order whatever the completion order.
    """
    cells = cfg.cells()
    workers = workers or _workers()
    results = []
    if workers == 1:
        for cell in cells:
            res = run_cell(cfg, cell)
            results.append(res)
            if stream:
                print(_cell_line(res), file=stream, flush=True)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futs = [pool.submit(run_cell, cfg, cell) for cell in cells]
            for fut in as_completed(futs):
                res = fut.result()
                results.append(res)
                if stream:
                    print(_cell_line(res), file=stream, flush=True)
    results.sort(key=_sort_key)
    return results


def cmd_check(args) -> int:
    cfg = SweepConfig(
        check=args.which, l=args.l, n_range=args.n, i_range=(args.i_min, args.i_max),
        j_max=args.j_max, w_max=args.w_max, fmt=args.format, output=args.output,
        errata=args.errata, family_file=args.family_file,
    )
    if cfg.check in ("alt-sign", "hook") and cfg.n_range[0] <= 1:
        print(f"note: the {cfg.check} conjecture is stated for n > 1; "
              "smaller n is checked and reported as-is", file=sys.stderr)
    results = run_sweep(cfg, stream=sys.stderr if not args.quiet else None)
    holds = all(r["holds"] for r in results)
    report = {
        "check": cfg.check, "l": cfg.l, "n": list(cfg.n_range),
        "errata": cfg.errata, "range_rule": expand.RANGE_RULE,
        "holds": holds, "violations": sum(not r["holds"] for r in results),
        "cells": results,
    }
    if cfg.fmt == "json":
        text = _dump(report)
    else:
        text = "\n".join([_cell_line(r) for r in results]
                         + [f"{cfg.check}: {len(results)} cells, "
                            f"{report['violations']} violated -> {'HOLDS' if holds else 'VIOLATED'}"])
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if holds else EXIT_VIOLATED


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mvsf", description="Exact matrix-valued spherical functions of P2(C).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, need_n=True):
        sp.add_argument("--l", type=int, default=0, help="type parameter l (matrix size l+1)")
        if need_n:
            sp.add_argument("--n", type=int, default=0, help="type parameter n >= 0")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--family-file", help="JSON family file (required for l >= 2)")

    sp = sub.add_parser("build", help="print Phi(w, t)")
    common(sp)
    sp.add_argument("--w", type=int, required=True)
    sp.add_argument("--normalized", action="store_true", help="divide each entry by its value at t=1")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("linearize", help="expand Phi(i)Phi(j) in the family")
    common(sp)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.set_defaults(func=cmd_linearize)

    sp = sub.add_parser("recurrence", help="three-term recurrence matrices at w")
    common(sp)
    sp.add_argument("--w", type=int, required=True)
    sp.set_defaults(func=cmd_recurrence)

    sp = sub.add_parser("psi", help="Psi(j, t) = Phi(j, t) Phi(0, t)^-1")
    common(sp)
    sp.add_argument("--j", type=int, required=True)
    sp.set_defaults(func=cmd_psi)

    sp = sub.add_parser("eigen", help="eigenvalue diagonals Lambda and M")
    sp.add_argument("--l", type=int, default=0)
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--w", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_eigen)

    sp = sub.add_parser("check", help="sweep a conjecture or identity over a grid")
    sp.add_argument("--which", choices=CHECKS, required=True)
    sp.add_argument("--l", type=int, default=0)
    sp.add_argument("--n", type=parse_range, default=(2, 2), help="n range, e.g. 2..8")
    sp.add_argument("--i-min", type=int, default=1)
    sp.add_argument("--i-max", type=int, default=4)
    sp.add_argument("--j-max", type=int, default=6)
    sp.add_argument("--w-max", type=int, default=10)
    sp.add_argument("--errata", action="store_true",
                    help="apply the documented correction to the printed l=1 table")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--output", help="write the final report here instead of stdout")
    sp.add_argument("--family-file")
    sp.add_argument("--quiet", action="store_true", help="do not stream per-cell lines to stderr")
    sp.set_defaults(func=cmd_check)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, spherical.FamilyError, ValueError) as exc:
        print(f"mvsf: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ArithmeticError as exc:
        print(f"mvsf: computation failed: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
