"""Command-line surface: single queries, table reproduction, and sweep harness.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
All numeric output is exact; payloads carry no timestamps, so identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import corr as corr_mod
from . import green as green_mod
from . import groupengine as ge
from . import jordan, oracle, standardness
from .delta import delta_profile
from .parith import ensure_prime, p_parts, p_power_at_least
from .perm import compose, embed, format_cycles, parse_cycles, rev, transposition


class UsageError(ValueError):
    """Bad flags or bad input values; rendered with exit code 2."""


def _caps(args) -> tuple[int, int]:
    """(matrix cap, degree cap), honouring --cap and the NORMAN_CAP environment override."""
    env = os.environ.get("NORMAN_CAP")
    matrix_cap = oracle.DEFAULT_CAP
    degree_cap = ge.DEFAULT_DEGREE_CAP
    if env is not None:
        try:
            matrix_cap = degree_cap = int(env)
        except ValueError as exc:
            raise UsageError(f"NORMAN_CAP must be an integer, got {env!r}") from exc
    if getattr(args, "cap", None) is not None:
        matrix_cap = degree_cap = args.cap
    return matrix_cap, degree_cap


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(args, payload: dict) -> None:
    _emit(args, json.dumps(payload, separators=(", ", ": ")))


def _swap_rs(args) -> tuple[int, int, bool]:
    r, s = args.r, args.s
    if r > s:
        return s, r, True
    return r, s, False


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"{flag} expects a comma-separated integer list, got {text!r}") from exc


# -- single-query commands ----------------------------------------------------


def cmd_lambda(args) -> int:
    r, s, swapped = _swap_rs(args)
    res = jordan.jordan_result(r, s, args.p)
    if args.json:
        _emit_json(args, {
            "r": r, "s": s, "p": args.p,
            "lambda": list(res.lam.parts),
            "pi": format_cycles(res.pi),
            "epsilon": list(res.epsilon.entries),
            "method": res.method,
            "swapped": swapped,
        })
    else:
        _emit(args, " ".join(str(v) for v in res.lam.parts))
    return 0


def cmd_pi(args) -> int:
    r, s, swapped = _swap_rs(args)
    res = jordan.jordan_result(r, s, args.p)
    if args.json:
        _emit_json(args, {
            "r": r, "s": s, "p": args.p,
            "lambda": list(res.lam.parts),
            "pi": format_cycles(res.pi),
            "epsilon": list(res.epsilon.entries),
            "method": res.method,
            "swapped": swapped,
        })
    else:
        _emit(args, format_cycles(res.pi))
    return 0


def cmd_standard(args) -> int:
    r, s, swapped = _swap_rs(args)
    report = standardness.standard_triple(r, s, args.p)
    equiv = standardness.equivalence_report(r, s, args.p)
    payload = {
        "r": r, "s": s, "p": args.p, "m": report.m,
        "matched_row": report.matched_row,
        "verdict": report.verdict,
        "conditions": equiv.conditions(),
        "swapped": swapped,
    }
    if args.json:
        _emit_json(args, payload)
    else:
        row = "none" if report.matched_row is None else str(report.matched_row)
        _emit(args, f"standard={str(report.verdict).lower()} row={row}")
    return 0


def cmd_delta(args) -> int:
    r, s, swapped = _swap_rs(args)
    prof = delta_profile(r, s, args.p)
    payload = {
        "r": r, "s": s, "p": args.p,
        "delta": list(prof.delta), "L": list(prof.L), "R": list(prof.R),
    }
    if swapped:
        payload["swapped"] = True
    _emit_json(args, payload)
    return 0


def cmd_oracle(args) -> int:
    r, s, swapped = _swap_rs(args)
    matrix_cap, _ = _caps(args)
    if args.kind == "unipotent":
        part = oracle.oracle_lambda(r, s, args.p, cap=matrix_cap)
    else:
        part = oracle.oracle_nilpotent(r, s, args.p, cap=matrix_cap)
    _emit_json(args, {
        "r": r, "s": s, "p": args.p, "kind": args.kind,
        "partition": list(part.parts),
        "swapped": swapped,
    })
    return 0


def cmd_green(args) -> int:
    r, s, swapped = _swap_rs(args)
    dec = green_mod.decompose(r, s, args.p)
    payload = {
        "r": r, "s": s, "p": args.p,
        "summands": [{"dim": d, "mult": m} for d, m in dec.summands],
    }
    if swapped:
        payload["swapped"] = True
    _emit_json(args, payload)
    return 0


def cmd_group(args) -> int:
    _, degree_cap = _caps(args)
    if args.census:
        _emit_json(args, {"r": args.r, "p": args.p,
                          "census": ge.generator_census(args.r, args.p)})
        return 0
    if args.blocks:
        b = p_parts(args.r, args.p).b
        _emit_json(args, {"r": args.r, "p": args.p, "b": b,
                          "blocks": [list(block) for block in ge.residue_blocks(args.r, b)]})
        return 0
    report = ge.verify_wreath(args.r, args.p, cap=degree_cap)
    _emit_json(args, {
        "r": report.r, "p": report.p, "a": report.a, "b": report.b,
        "generator_count": report.generator_count,
        "order": report.order,
        "expected_order": report.expected_order,
        "blocks_invariant": report.blocks_invariant,
        "phi_image_is_dihedral": report.phi_image_is_dihedral,
        "diagonal_contained": report.diagonal_contained,
        "l9_transposition_found": report.l9_transposition_found,
        "verdict": report.verdict,
    })
    return 0 if report.verdict else 1


def cmd_corr(args) -> int:
    given = [v is not None for v in (args.t, args.eps, args.pi)]
    if sum(given) != 1:
        raise UsageError("corr needs exactly one of --t, --eps, --pi")
    if args.t is not None:
        if args.r is None:
            raise UsageError("--t requires --r")
        members = tuple(_parse_int_list(args.t, "--t")) if args.t.strip() else ()
        T = corr_mod.SubsetProfile(args.r, members)
    elif args.eps is not None:
        eps = corr_mod.validate_eps(_parse_int_list(args.eps, "--eps"))
        T = corr_mod.eps_to_subset(eps)
    else:
        if args.r is None:
            raise UsageError("--pi requires --r")
        pi = parse_cycles(args.pi, args.r)
        T = corr_mod.perm_to_subset(pi)
    _emit_json(args, {
        "r": T.r,
        "subset": list(T.members),
        "epsilon": list(corr_mod.subset_to_eps(T).entries),
        "pi": format_cycles(corr_mod.subset_to_perm(T)),
    })
    return 0


# -- table reproduction -------------------------------------------------------


def _pi3_rows(p: int) -> tuple[list[tuple[str, str, str]], bool]:
    """Rows (class, value, status) of the small-r table for one prime; computed, then
    compared against the closed-form lane."""
    e = 2 if p == 2 else 1
    q = p**e
    rows = []
    ok = True
    classes: list[tuple[str, list[int]]] = [
        ("0", [x for x in range(q) if x == 0]),
        ("1", [x for x in range(q) if x == 1]),
        ("-1", [x for x in range(q) if x == q - 1]),
        ("otherwise", [x for x in range(2, q - 1)]),
    ]
    for label, residues in classes:
        if not residues:
            rows.append((label, "()", "vacuous"))
            continue
        values = set()
        for x in residues:
            s0 = x if x >= 3 else x + q
            for s in (s0, s0 + q, s0 + 2 * q):
                values.add(jordan.pi_of(3, s, p))
        expected = {jordan._pi3(x, p) for x in residues}
        if len(values) == 1 and values == expected:
            rows.append((label, format_cycles(values.pop()), "ok"))
        else:
            ok = False
            rows.append((label, "|".join(sorted(format_cycles(v) for v in values)), "FAIL"))
    return rows, ok


def _small_s_rows(p: int, rmax: int) -> tuple[list[tuple[str, str, str, str]], bool]:
    """Rows (case, formula, r-range, status) for the four small-residue cases."""
    formulas = {
        0: ("Rev(1,r)", 1),
        1: ("Rev(2,r)", 2),
        2: ("(1,2)Rev(3,r) if p|r else Rev(3,r)", 3),
        3: ("pi(3,r,p)Rev(4,r)", 4),
    }
    rows = []
    all_ok = True
    for case in range(4):
        formula, rmin = formulas[case]
        failures = []
        for r in range(rmin, rmax + 1):
            pm = p_power_at_least(r, p)[1]
            s = pm + case
            got = jordan.pi_of(r, s, p)
            if case == 0:
                want = rev(1, r, r)
            elif case == 1:
                want = rev(2, r, r)
            elif case == 2:
                want = rev(3, r, r)
                if r % p == 0:
                    want = compose(transposition(1, 2, r), want)
            else:
                want = compose(embed(jordan._pi3(r, p), r), rev(4, r, r))
            if got != want:
                failures.append(r)
        status = "ok" if not failures else "FAIL(r=" + ",".join(map(str, failures)) + ")"
        all_ok = all_ok and not failures
        rows.append((str(case), formula, f"{rmin}..{rmax}", status))
    return rows, all_ok


def _render_columns(header: list[str], rows: list[tuple[str, ...]]) -> str:
    widths = [max(len(header[i]), *(len(row[i]) for row in rows)) if rows else len(header[i])
              for i in range(len(header))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def cmd_table(args) -> int:
    primes = _parse_int_list(args.primes, "--primes") if args.primes else [args.p or 2]
    for p in primes:
        ensure_prime(p)
    blocks = []
    ok = True
    if args.name == "pi3":
        for p in primes:
            rows, good = _pi3_rows(p)
            ok = ok and good
            e = 2 if p == 2 else 1
            blocks.append(f"pi(3,s,p) for p={p} (modulus {p**e})\n"
                          + _render_columns(["s_mod", "pi", "status"], rows))
    elif args.name == "small-s":
        rmax = args.rmax or 25
        for p in primes:
            rows, good = _small_s_rows(p, rmax)
            ok = ok and good
            blocks.append(f"pi(r,s,p) for small s mod p^m, p={p}\n"
                          + _render_columns(["case", "formula", "r", "status"], rows))
    else:
        raise UsageError(f"unknown table {args.name!r}")
    _emit(args, "\n\n".join(blocks))
    return 0 if ok else 1


# -- sweep harness ------------------------------------------------------------


@dataclass(frozen=True)
class SweepSpec:
    """A validated sweep request: grids, primes, checks, and rendering."""

    rmax: int
    smax: Optional[int]  # None means one full period per (r, p)
    primes: tuple[int, ...]
    checks: tuple[str, ...]
    format: str
    workers: int

    def __post_init__(self):
        if self.rmax < 1:
            raise UsageError(f"--rmax must be >= 1, got {self.rmax}")
        if not self.primes:
            raise UsageError("prime list must be nonempty")
        for p in self.primes:
            ensure_prime(p)
        for c in self.checks:
            if c not in _SWEEP_CHECKS:
                raise UsageError(
                    f"unknown check {c!r}; known: {', '.join(sorted(_SWEEP_CHECKS))}")
        if self.workers < 1:
            raise UsageError(f"--workers must be >= 1, got {self.workers}")


def _rows_oracle_equiv(rmax, smax, primes, caps):
    for p in primes:
        for r in range(1, rmax + 1):
            for s in range(r, (smax or rmax) + 1):
                good = oracle.oracle_lambda(r, s, p, cap=caps[0]).parts == \
                    jordan.lambda_of(r, s, p).parts
                yield (r, s, p, "oracle-equiv", good, "")


def _rows_involution(rmax, smax, primes, caps):
    for p in primes:
        for r in range(1, rmax + 1):
            for s in range(r, (smax or rmax) + 1):
                pi = jordan.pi_of(r, s, p)
                yield (r, s, p, "involution", compose(pi, pi).is_identity(), "")


def _rows_fast_path(rmax, smax, primes, caps):
    for p in primes:
        for r in range(1, rmax + 1):
            for s in range(r, (smax or rmax) + 1):
                hit = jordan.pi_fast_path(r, s, p)
                if hit is None:
                    yield (r, s, p, "fast-path", True, "absent")
                else:
                    good = hit.perm == jordan.pi_of(r, s, p)
                    yield (r, s, p, "fast-path", good, hit.rule)


def _rows_six_way(rmax, smax, primes, caps):
    for p in primes:
        for r in range(1, rmax + 1):
            pm = p_power_at_least(r, p)[1]
            top = (r + pm) if smax is None else smax
            for s in range(r, top + 1):
                try:
                    standardness.equivalence_report(r, s, p)
                    yield (r, s, p, "six-way", True, "")
                except standardness.EquivalenceViolation as exc:
                    yield (r, s, p, "six-way", False, str(exc))


def _rows_bijection(rmax, smax, primes, caps):
    from itertools import combinations
    for r in range(1, rmax + 1):
        bad = 0
        total = 0
        for k in range(r):
            for members in combinations(range(1, r), k):
                T = corr_mod.SubsetProfile(r, members)
                eps = corr_mod.subset_to_eps(T)
                total += 1
                if (corr_mod.eps_to_subset(eps) != T
                        or corr_mod.subset_to_perm(T) != corr_mod.eps_to_perm(eps)
                        or corr_mod.perm_to_eps(corr_mod.subset_to_perm(T)) != eps):
                    bad += 1
        yield (r, 0, 0, "bijection-roundtrip", bad == 0, f"subsets={total}")


def _rows_wreath(rmax, smax, primes, caps):
    for p in primes:
        for r in range(2, rmax + 1):
            report = ge.verify_wreath(r, p, cap=caps[1])
            detail = f"order={report.order}"
            yield (r, 0, p, "wreath", report.verdict, detail)


_SWEEP_CHECKS = {
    "oracle-equiv": _rows_oracle_equiv,
    "involution": _rows_involution,
    "fast-path": _rows_fast_path,
    "six-way": _rows_six_way,
    "bijection-roundtrip": _rows_bijection,
    "wreath": _rows_wreath,
}


def cmd_sweep(args) -> int:
    checks = tuple(c.strip() for c in args.checks.split(",")) if args.checks \
        else ("oracle-equiv",)
    primes = tuple(_parse_int_list(args.primes, "--primes")) if args.primes else (2, 3)
    try:
        smax = None if args.smax in (None, "period") else int(args.smax)
    except ValueError as exc:
        raise UsageError(f"--smax expects an integer or 'period', got {args.smax!r}") from exc
    spec = SweepSpec(rmax=args.rmax or 8, smax=smax, primes=primes, checks=checks,
                     format=args.format, workers=args.workers)
    caps = _caps(args)

    def run_check(name):
        return list(_SWEEP_CHECKS[name](spec.rmax, spec.smax, spec.primes, caps))

    if spec.workers > 1:
        with ThreadPoolExecutor(max_workers=spec.workers) as pool:
            chunks = list(pool.map(run_check, spec.checks))
    else:
        chunks = [run_check(name) for name in spec.checks]
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda row: (row[3], row[2], row[0], row[1]))

    failures = [row for row in rows if not row[4]]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["r", "s", "p", "check", "status", "detail"])
        for r, s, p, check, okay, detail in rows:
            writer.writerow([r, s, p, check, "pass" if okay else "fail", detail])
        _emit(args, buf.getvalue())
    elif args.format == "json":
        payload = {
            "summary": _sweep_summary(rows),
            "rows": [{"r": r, "s": s, "p": p, "check": c,
                      "status": "pass" if okay else "fail", "detail": d}
                     for r, s, p, c, okay, d in rows],
        }
        _emit_json(args, payload)
    else:
        lines = []
        for name, info in _sweep_summary(rows).items():
            lines.append(f"{name}: {info['passed']}/{info['cells']} passed"
                         + (f"; first failure {info['first_failure']}"
                            if info["first_failure"] else ""))
        _emit(args, "\n".join(lines))
    return 1 if failures else 0


def _sweep_summary(rows):
    summary: dict[str, dict] = {}
    for r, s, p, check, okay, detail in rows:
        info = summary.setdefault(check, {"cells": 0, "passed": 0, "first_failure": None})
        info["cells"] += 1
        if okay:
            info["passed"] += 1
        elif info["first_failure"] is None:
            info["first_failure"] = f"(r={r}, s={s}, p={p}) {detail}".strip()
    return summary


# -- argument parsing ---------------------------------------------------------


def _add_rsp(sub, s_required=True):
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--s", type=int, required=s_required)
    sub.add_argument("--p", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normanform",
        description="Jordan partitions of tensor products of unipotent Jordan "
                    "blocks over GF(p), and the involutions they define.")
    subs = parser.add_subparsers(dest="command", required=True)

    common_out = {"--out": dict(type=str, default=None, help="write output to FILE")}

    def add(name, func, **kw):
        sub = subs.add_parser(name, **kw)
        sub.set_defaults(func=func)
        for flag, opts in common_out.items():
            sub.add_argument(flag, **opts)
        return sub

    sub = add("lambda", cmd_lambda, help="Jordan partition of J_r (x) J_s over GF(p)")
    _add_rsp(sub)
    sub.add_argument("--json", action="store_true")

    sub = add("pi", cmd_pi, help="the Norman permutation in cycle notation")
    _add_rsp(sub)
    sub.add_argument("--json", action="store_true")

    sub = add("standard", cmd_standard, help="standardness of the triple (r, s, p)")
    _add_rsp(sub)
    sub.add_argument("--json", action="store_true")

    sub = add("delta", cmd_delta, help="delta bits and L/R gap functions")
    _add_rsp(sub)

    sub = add("oracle", cmd_oracle, help="brute-force Jordan partition from matrix ranks")
    _add_rsp(sub)
    sub.add_argument("--kind", choices=["unipotent", "nilpotent"], default="unipotent")
    sub.add_argument("--cap", type=int, default=None, help="matrix dimension guard")

    sub = add("green", cmd_green, help="tensor decomposition as dimension multiset")
    _add_rsp(sub)

    sub = add("group", cmd_group, help="structure of the group of Norman involutions")
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--p", type=int, required=True)
    mode = sub.add_mutually_exclusive_group()
    mode.add_argument("--verify", action="store_true", help="full wreath verification (default)")
    mode.add_argument("--census", action="store_true", help="count distinct generators")
    mode.add_argument("--blocks", action="store_true", help="emit the residue block system")
    sub.add_argument("--cap", type=int, default=None, help="degree guard")

    sub = add("corr", cmd_corr, help="triangle of subset / deviation vector / involution")
    sub.add_argument("--r", type=int)
    sub.add_argument("--t", type=str, default=None, help="subset of [r-1], e.g. '1,3'")
    sub.add_argument("--eps", type=str, default=None, help="deviation vector, e.g. '2,0,-2'")
    sub.add_argument("--pi", type=str, default=None, help="cycle text, e.g. '(1,3)'")

    sub = add("table", cmd_table, help="recompute and verify the closed-form tables")
    sub.add_argument("--name", choices=["pi3", "small-s"], required=True)
    sub.add_argument("--p", type=int, default=None)
    sub.add_argument("--primes", type=str, default=None, help="comma list, e.g. '2,3,5'")
    sub.add_argument("--rmax", type=int, default=None)

    sub = add("sweep", cmd_sweep, help="run verification sweeps over parameter grids")
    sub.add_argument("--checks", type=str, default=None,
                     help=f"comma list of {', '.join(sorted(_SWEEP_CHECKS))}")
    sub.add_argument("--rmax", type=int, default=None)
    sub.add_argument("--smax", type=str, default=None, help="integer or 'period'")
    sub.add_argument("--primes", type=str, default=None)
    sub.add_argument("--format", choices=["table", "csv", "json"], default="table")
    sub.add_argument("--workers", type=int, default=1)
    sub.add_argument("--cap", type=int, default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        _emit_json(args, {"error": {"code": "usage", "message": str(exc)}})
        return 2
    except (oracle.DimensionCapExceeded, ge.DegreeCapExceeded) as exc:
        _emit_json(args, {"error": {"code": "resource-cap", "message": str(exc)}})
        return 2
    except (standardness.EquivalenceViolation, green_mod.GreenIdentityViolation) as exc:
        _emit_json(args, {"error": {"code": "verification-failure", "message": str(exc)}})
        return 1
    except ValueError as exc:
        _emit_json(args, {"error": {"code": "invalid-argument", "message": str(exc)}})
        return 2


if __name__ == "__main__":
    sys.exit(main())
