"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import formats
from .gkm import gkm_check, chern_quot, chern_sub, chern_sub_dual, verify_pushforward_theorem, xi_class
from .invariants import (
    charpoly_checks,
    classical_tutte,
    coefficient_identities,
    equivariant_charpoly,
    equivariant_charpoly_subset_sum,
    equivariant_from_potts,
    equivariant_tutte,
    equivariant_tutte_dc,
    evaluation_report,
    f_polynomial,
    f_polynomial_dc,
    multivariate_tutte,
    potts_from_equivariant,
    reciprocal_substitution_identities,
    swap_dual_variables,
    recover_matroid,
    t_to_zero,
    verify_tutte_fm_relation,
)
from .matroid import MAX_ENUMERATION_GROUND, Matroid, default_ground, dual, enumerate_labeled_matroids
from .poly import MultiPoly, PolyFraction, coefficient_of_t_monomial, fraction_eq
from .valuation import check_valuative, delta24_split_fixture, indicator_is_zero

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

DEFAULT_MAX_GROUND = 8


class UsageError(Exception):
    pass


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--max-ground", type=int, default=None, metavar="N",
                   help="refuse inputs with more than N elements")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eqtutte", description="Equivariant Tutte polynomial toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tutte", help="equivariant Tutte polynomial")
    p.add_argument("input")
    p.add_argument("--algorithm", choices=("closed", "dc"), default="closed")
    p.add_argument("--eval", nargs=4, metavar=("X", "Y", "R", "S"))
    p.add_argument("--coeff", metavar="E1,E2,...", help="coefficient of the product of these t-variables")
    _add_common(p)

    p = sub.add_parser("classical", help="classical Tutte polynomial")
    p.add_argument("input")
    _add_common(p)

    p = sub.add_parser("potts", help="multivariate (Potts) Tutte polynomial")
    p.add_argument("input")
    _add_common(p)

    p = sub.add_parser("charpoly", help="equivariant reduced characteristic polynomial")
    p.add_argument("input")
    _add_common(p)

    p = sub.add_parser("fpoly", help="pushforward polynomial F")
    p.add_argument("input")
    p.add_argument("--algorithm", choices=("closed", "dc"), default="closed")
    _add_common(p)

    p = sub.add_parser("evaluate", help="table evaluation report")
    p.add_argument("input")
    p.add_argument("--eval", nargs=4, metavar=("X", "Y", "R", "S"), required=True)
    _add_common(p)

    p = sub.add_parser("recover", help="rebuild a matroid from its (1,1,1,0) evaluation")
    p.add_argument("--poly", required=True)
    p.add_argument("--ground", required=True)
    _add_common(p)

    p = sub.add_parser("verify-pushforward", help="localized pushforward against F at every point")
    p.add_argument("input")
    _add_common(p)

    p = sub.add_parser("verify-identities", help="run the identity suite on one matroid")
    p.add_argument("input")
    _add_common(p)

    p = sub.add_parser("enumerate", help="list every labeled matroid on n elements")
    p.add_argument("size", type=int)
    _add_common(p)

    p = sub.add_parser("valuativity", help="indicator and invariant checks for a signed combination")
    p.add_argument("input", nargs="?", help="combination JSON (default: the Delta(2,4) split)")
    p.add_argument("--grid-denominator", type=int, default=4, metavar="D")
    p.add_argument("--invariant", action="append",
                   help="EquivariantTutte, Potts, EquivariantCharPoly or Table:x,y,r,s (repeatable)")
    _add_common(p)
    return parser


# helpers


def _load(path: str) -> Any:
    try:
        return formats.load_json(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _load_matroid(args) -> tuple[Matroid, Any]:
    try:
        M, G = formats.matroid_or_graph_from_json(_load(args.input))
    except ValueError as exc:
        raise UsageError(f"{args.input}: {exc}") from exc
    limit = args.max_ground if args.max_ground is not None else DEFAULT_MAX_GROUND
    if M.size > limit:
        raise UsageError(f"ground set has {M.size} elements; limit is {limit}")
    return M, G


def _point(values: Sequence[str]) -> tuple:
    try:
        return tuple(formats.parse_rational(v) for v in values)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _poly_payload(p: MultiPoly, fmt: str, ground) -> str:
    if fmt == "json":
        return formats.dump_json(formats.poly_to_json(p, ground))
    return p.to_text(ground)


def _fraction_payload(f: PolyFraction, fmt: str, ground) -> str:
    if fmt == "json":
        return formats.dump_json(formats.fraction_to_json(f, ground))
    return formats.fraction_text(f, ground)


def _report_payload(report: dict, fmt: str) -> str:
    if fmt == "json":
        return formats.dump_json(report)
    lines = []
    for key, value in report.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


# commands


def cmd_tutte(args) -> tuple[int, str]:
    M, _ = _load_matroid(args)
    p = equivariant_tutte_dc(M) if args.algorithm == "dc" else equivariant_tutte(M)
    if args.eval:
        x0, y0, r0, s0 = _point(args.eval)
        p = p.subs({"x": x0, "y": y0, "r": r0, "s": s0})
    if args.coeff is not None:
        labels = [e for e in args.coeff.split(",") if e]
        unknown = [e for e in labels if e not in M.ground]
        if unknown:
            raise UsageError(f"unknown labels {unknown}")
        p = coefficient_of_t_monomial(p, labels)
    return EXIT_OK, _poly_payload(p, args.format, M.ground)


def cmd_classical(args) -> tuple[int, str]:
    M, _ = _load_matroid(args)
    return EXIT_OK, _poly_payload(classical_tutte(M), args.format, M.ground)


def cmd_potts(args) -> tuple[int, str]:
    M, _ = _load_matroid(args)
    return EXIT_OK, _fraction_payload(multivariate_tutte(M), args.format, M.ground)


def cmd_charpoly(args) -> tuple[int, str]:
    M, _ = _load_matroid(args)
    if M.size == 0:
        raise UsageError("the characteristic polynomial needs a non-empty ground set")
    return EXIT_OK, _poly_payload(equivariant_charpoly(M), args.format, M.ground)


def cmd_fpoly(args) -> tuple[int, str]:
    M, _ = _load_matroid(args)
    if M.size == 0:
        raise UsageError("F needs a non-empty ground set")
    F = f_polynomial_dc(M) if args.algorithm == "dc" else f_polynomial(M)
    return EXIT_OK, _poly_payload(F, args.format, M.ground)


def cmd_evaluate(args) -> tuple[int, str]:
    M, G = _load_matroid(args)
    point = _point(args.eval)
    try:
        report = evaluation_report(M, point, graph=G)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = report.to_json()
    ok = report.match and report.identities_ok
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), _report_payload(payload, args.format)


def cmd_recover(args) -> tuple[int, str]:
    try:
        p = formats.poly_from_json(_load(args.poly))
    except ValueError as exc:
        raise UsageError(f"{args.poly}: {exc}") from exc
    ground = _load(args.ground)
    if isinstance(ground, dict):
        ground = ground.get("ground")
    if not isinstance(ground, list) or any(not isinstance(g, str) for g in ground):
        raise UsageError("ground file must hold a list of labels or {\"ground\": [...]}")
    try:
        M = recover_matroid(p, ground)
    except ValueError as exc:
        return EXIT_CHECK_FAILED, _report_payload({"ok": False, "error": str(exc)}, args.format)
    data = formats.matroid_to_json(M)
    if args.format == "json":
        return EXIT_OK, formats.dump_json(data)
    return EXIT_OK, repr(M)


def cmd_verify_pushforward(args) -> tuple[int, str]:
    M, _ = _load_matroid(args)
    if M.size == 0:
        raise UsageError("the pushforward needs a non-empty ground set")
    if M.size > 6:
        raise UsageError("permutation tuples are limited to 6 elements")
    checks = verify_pushforward_theorem(M)
    rows = [
        {
            "point": list(c.point),
            "ok": c.ok,
            "lhs": formats.fraction_to_json(c.lhs, M.ground),
            "rhs": formats.poly_to_json(c.rhs, M.ground),
        }
        for c in checks
    ]
    ok = all(c.ok for c in checks)
    if args.format == "json":
        payload = formats.dump_json({"ok": ok, "points": rows})
    else:
        lines = [f"{c.point[0]},{c.point[1]}: {'ok' if c.ok else 'FAIL'}" for c in checks]
        lines.append(f"all: {'ok' if ok else 'FAIL'}")
        payload = "\n".join(lines)
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), payload


def identity_suite(M: Matroid) -> dict[str, bool]:
    """Named identity checks for one matroid, in a fixed order."""
    tutte = equivariant_tutte(M)
    results = {
        "tutte_closed_equals_dc": tutte == equivariant_tutte_dc(M),
        "t_zero_gives_classical": t_to_zero(tutte, M.ground) == classical_tutte(M),
        "rs_zero_gives_classical": tutte.subs({"r": 0, "s": 0}) == classical_tutte(M),
        "duality_swap": equivariant_tutte(dual(M)) == swap_dual_variables(tutte),
        "potts_round_trip": fraction_eq(
            equivariant_from_potts(potts_from_equivariant(tutte, M.rank, M.ground), M.rank, M.ground),
            PolyFraction(tutte),
        ),
        "potts_direct": fraction_eq(potts_from_equivariant(tutte, M.rank, M.ground), multivariate_tutte(M)),
        "coefficient_identities": coefficient_identities(M),
        "reciprocal_substitutions": reciprocal_substitution_identities(M),
    }
    if M.size >= 1:
        results["f_closed_equals_dc"] = f_polynomial(M) == f_polynomial_dc(M)
        results["tutte_f_relation"] = verify_tutte_fm_relation(M)
        results["charpoly_two_ways"] = equivariant_charpoly(M) == equivariant_charpoly_subset_sum(M)
        results["charpoly_relations"] = charpoly_checks(M).ok
    if 1 <= M.size <= 6:
        classes = [xi_class(M)]
        classes += [chern_sub(M, i) for i in range(M.rank + 1)]
        classes += [chern_sub_dual(M, i) for i in range(M.rank + 1)]
        classes += [chern_quot(M, i) for i in range(M.corank + 1)]
        results["gkm_condition"] = all(gkm_check(c) for c in classes)
    return results


def cmd_verify_identities(args) -> tuple[int, str]:
    M, _ = _load_matroid(args)
    results = identity_suite(M)
    ok = all(results.values())
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), _report_payload({"ok": ok, "checks": results}, args.format)


def cmd_enumerate(args) -> tuple[int, str]:
    limit = MAX_ENUMERATION_GROUND if args.max_ground is None else min(args.max_ground, MAX_ENUMERATION_GROUND)
    if args.size < 0 or args.size > limit:
        raise UsageError(f"size must be between 0 and {limit}")
    matroids = list(enumerate_labeled_matroids(default_ground(args.size)))
    if args.format == "json":
        return EXIT_OK, formats.dump_json([formats.matroid_to_json(M) for M in matroids])
    lines = [repr(M) for M in matroids] + [f"count: {len(matroids)}"]
    return EXIT_OK, "\n".join(lines)


def cmd_valuativity(args) -> tuple[int, str]:
    if args.grid_denominator < 1:
        raise UsageError("--grid-denominator must be at least 1")
    if args.input:
        try:
            combo = formats.combination_from_json(_load(args.input))
        except ValueError as exc:
            raise UsageError(f"{args.input}: {exc}") from exc
    else:
        combo = delta24_split_fixture()
    names = args.invariant or ["EquivariantTutte", "Potts", "EquivariantCharPoly", "Table:1,1,1,0"]
    results: dict[str, bool] = {"indicator": indicator_is_zero(combo, args.grid_denominator)}
    for name in names:
        try:
            results[name] = check_valuative(combo, name)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    ok = all(results.values())
    report = {"ok": ok, "grid_denominator": args.grid_denominator, "checks": results}
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), _report_payload(report, args.format)


COMMANDS = {
    "tutte": cmd_tutte,
    "classical": cmd_classical,
    "potts": cmd_potts,
    "charpoly": cmd_charpoly,
    "fpoly": cmd_fpoly,
    "evaluate": cmd_evaluate,
    "recover": cmd_recover,
    "verify-pushforward": cmd_verify_pushforward,
    "verify-identities": cmd_verify_identities,
    "enumerate": cmd_enumerate,
    "valuativity": cmd_valuativity,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, payload = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.out:
        try:
            Path(args.out).write_text(payload + "\n", encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=stderr)
            return EXIT_USAGE
    else:
        print(payload, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
