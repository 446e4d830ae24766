"""Command-line front end: construct, distance, sweep, bounds.

Exit codes: 0 success, 2 validation error, 3 enumeration/resource limit.
Identical arguments (and seed) produce byte-identical output; the default
seed comes from the QC15_SEED environment variable, falling back to 0.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import ensemble
from .algebra import PrimeField, RingElement, cyclotomic_cosets, min_factor_degree
from .codes import DEFAULT_ENUM_LIMIT, construct_code
from .ensemble import CSV_FIELDS, EnsembleReport
from .errors import EnumerationTooLarge, QC15Error

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_LIMIT = 3


class ValidationError(Exception):
    """Validation failure carrying a message for stderr."""


def _field(q: int) -> PrimeField:
    try:
        return PrimeField(q)
    except ValueError:
        raise ValidationError("q must be an odd prime")


def _default_seed() -> int:
    return int(os.environ.get("QC15_SEED", "0"))


def _parse_int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("..")
    return int(lo), int(hi)


# -- construct / distance ------------------------------------------------------------


def _cmd_construct(args: argparse.Namespace, with_distance: bool) -> int:
    field = _field(args.q)
    m = args.m
    try:
        a = RingElement.from_text(field, 2 * m, args.a)
        a_prime = RingElement.from_text(field, m, args.a_prime)
    except ValueError as exc:
        raise ValidationError(f"bad coefficient string: {exc}")
    code = construct_code(a, a_prime)
    distance = None
    if with_distance or args.distance:
        distance = code.min_distance(limit=args.max_enum)
    doc = code.to_json_dict(distance)
    if args.list_codewords:
        words = code.codewords(limit=args.max_enum)
        doc["codewords"] = sorted(w.to_string() for w in words)
    print(json.dumps(doc, indent=2))
    return EXIT_OK


# -- sweep ----------------------------------------------------------------------------


def _fullrank_exact_report(field: PrimeField, m: int) -> EnsembleReport:
    exact = ensemble.exact_fullrank_prob(m, field.p)
    pairs = field.p ** (2 * (m - 1))
    return EnsembleReport(
        q=field.p,
        m=m,
        delta=None,
        mode="exact",
        trials=pairs,
        hits=int(exact * pairs),
        estimate=float(exact),
        exact=exact,
        bound=None,
        zero_code_fraction=1.0 / pairs,
        seed=None,
    )


def _cmd_sweep(args: argparse.Namespace) -> int:
    field = _field(args.q)
    ms = _parse_int_list(args.m)
    seed = args.seed if args.seed is not None else _default_seed()
    deltas: list[Fraction | None]
    if args.fullrank:
        deltas = [None]
    else:
        if not args.delta:
            raise ValidationError("sweep needs --delta unless --fullrank is given")
        deltas = [ensemble.as_fraction(d) for d in args.delta.split(",")]

    reports: list[EnsembleReport] = []
    for m in ms:
        for delta in deltas:
            if args.fullrank:
                if args.exact:
                    reports.append(_fullrank_exact_report(field, m))
                else:
                    reports.append(ensemble.mc_fullrank_prob(field, m, args.trials, seed))
                continue
            if args.exact:
                try:
                    reports.append(
                        ensemble.exact_delta_leq_prob(field, m, delta, args.max_enum)
                    )
                    continue
                except EnumerationTooLarge:
                    warn = "exact sweep infeasible; fell back to montecarlo"
                    reports.append(
                        ensemble.mc_delta_prob(
                            field, m, delta, args.trials, seed, args.max_enum
                        ).with_warning(warn)
                    )
                    continue
            reports.append(
                ensemble.mc_delta_prob(field, m, delta, args.trials, seed, args.max_enum)
            )

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for report in reports:
        writer.writerow(report.csv_row())
    return EXIT_OK


# -- bounds -----------------------------------------------------------------------------


def _cmd_bounds(args: argparse.Namespace) -> int:
    field = _field(args.q)
    q = field.p
    doc: dict = {"q": q, "delta_star": bounds_mod.delta_star(q)}
    doc["h_inv_half"] = bounds_mod.qary_entropy_inv(q, 0.5)

    if args.scan_m:
        lo, hi = _parse_range(args.scan_m)
        doc["scan"] = bounds_mod.scan_goodness_records(q, lo, hi)
        print(json.dumps(doc, indent=2))
        return EXIT_OK

    if args.m is None:
        raise ValidationError("bounds needs --m or --scan-m")
    m = args.m
    cyclotomic_cosets(m, q)  # validates coprimality
    ell = min_factor_degree(m, q)
    doc.update(
        {
            "m": m,
            "ell_m": ell,
            "goodness_indicator": bounds_mod.goodness_indicator(m, q),
            "exact_fullrank_prob": float(ensemble.exact_fullrank_prob(m, q)),
        }
    )
    if args.delta is not None:
        delta = float(ensemble.as_fraction(args.delta))
        doc["delta"] = delta
        doc["delta_prob_bound"] = bounds_mod.delta_prob_bound(m, delta, q)
    if args.ideals:
        counts = ensemble.count_ideals_by_dim(m, q)
        doc["ideal_counts"] = {
            str(d): {"count": c, "bound": float(m ** (d / ell))}
            for d, c in counts.items()
            if d > 0
        }
    print(json.dumps(doc, indent=2))
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qc15",
        description="Quasi-cyclic codes of index 1½: construction, distance, "
        "ensemble experiments, and analytic bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser):
        p.add_argument("--q", type=int, required=True, help="odd prime field size")
        p.add_argument("--max-enum", type=int, default=DEFAULT_ENUM_LIMIT,
                       help="enumeration ceiling (default 2^24)")

    p_con = sub.add_parser("construct", help="build a code from (a, a') and print JSON")
    add_common(p_con)
    p_con.add_argument("--m", type=int, required=True, help="co-index parameter")
    p_con.add_argument("--a", type=str, required=True,
                       help="ascending coefficients of a, e.g. 2,1,2,1")
    p_con.add_argument("--a-prime", type=str, required=True, dest="a_prime",
                       help="ascending coefficients of a'")
    p_con.add_argument("--distance", action="store_true", help="include the minimum distance")
    p_con.add_argument("--list-codewords", action="store_true", dest="list_codewords",
                       help="include all codewords")

    p_dist = sub.add_parser("distance", help="construct and always report the minimum distance")
    add_common(p_dist)
    p_dist.add_argument("--m", type=int, required=True)
    p_dist.add_argument("--a", type=str, required=True)
    p_dist.add_argument("--a-prime", type=str, required=True, dest="a_prime")
    p_dist.add_argument("--list-codewords", action="store_true", dest="list_codewords")

    p_sw = sub.add_parser("sweep", help="ensemble experiments, one CSV row per (m, delta)")
    add_common(p_sw)
    p_sw.add_argument("--m", type=str, required=True, help="comma-separated co-index list")
    p_sw.add_argument("--delta", type=str, default=None,
                      help="comma-separated relative-distance thresholds")
    p_sw.add_argument("--trials", type=int, default=1000)
    p_sw.add_argument("--seed", type=int, default=None,
                      help="default from QC15_SEED, else 0")
    p_sw.add_argument("--exact", action="store_true",
                      help="full pair-space sweep instead of sampling")
    p_sw.add_argument("--fullrank", action="store_true",
                      help="estimate Pr(dim = m-1) instead of the distance event")

    p_bd = sub.add_parser("bounds", help="analytic bound table as JSON")
    p_bd.add_argument("--q", type=int, required=True)
    p_bd.add_argument("--m", type=int, default=None)
    p_bd.add_argument("--delta", type=str, default=None)
    p_bd.add_argument("--ideals", action="store_true",
                      help="include ideal counts by dimension with their bounds")
    p_bd.add_argument("--scan-m", type=str, default=None, dest="scan_m",
                      help="range LO..HI; report record-small goodness indicators")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "construct":
            return _cmd_construct(args, with_distance=False)
        if args.command == "distance":
            args.distance = True
            return _cmd_construct(args, with_distance=True)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "bounds":
            return _cmd_bounds(args)
        raise ValidationError(f"unknown command {args.command}")
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except EnumerationTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except QC15Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
