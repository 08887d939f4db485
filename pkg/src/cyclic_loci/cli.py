"""Command-line interface.

Exit codes: 0 success, 2 bad input, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import galois, kummer
from .checks import SweepConfig, run_checks, worker_count
from .enumeration import enumerate_components
from .errors import ConsistencyFailure, EmptyInertia, HurwitzError
from .hurwitz import (
    BranchingDatum,
    HurwitzDatum,
    canonicalize,
    check_order,
    check_unit,
    etale_part,
    is_hyperbolic,
    marked_degree,
    psi_degree,
    rh_genus,
    unit_twist,
)
from .records import atlas_to_csv, atlas_to_json

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError(f"malformed integer list {text!r}") from None


def _datum_dict(kr: BranchingDatum) -> dict:
    return {"k": list(kr.k.exponents), "r": list(kr.r)}


def cmd_atlas(args) -> int:
    check_order(args.order)
    if not is_hyperbolic(args.genus, args.marks):
        raise UsageError(f"(g, m) = ({args.genus}, {args.marks}) is not hyperbolic: 2g - 2 + m <= 0")
    if args.genus < 0 or args.marks < 0:
        raise UsageError("genus and marks must be non-negative")
    labels = enumerate_components(args.genus, args.marks, args.order, args.no_etale_only)
    text = atlas_to_csv(labels) if args.format == "csv" else atlas_to_json(labels)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    log.info("%d components", len(labels))
    return EXIT_OK


def cmd_check(args) -> int:
    bounds = (args.max_genus, args.max_order, args.max_marks, args.max_prime_genus,
              args.max_branch, args.galois_order, args.galois_length)
    if min(bounds) < 0:
        raise UsageError("sweep bounds must be non-negative")
    cfg = SweepConfig(
        max_genus=args.max_genus,
        max_order=args.max_order,
        max_marks=args.max_marks,
        max_prime_genus=args.max_prime_genus,
        max_branch=args.max_branch,
        galois_order=args.galois_order,
        galois_length=args.galois_length,
    )
    start = time.perf_counter()
    try:
        counts, notes = run_checks(cfg, worker_count())
    except ConsistencyFailure as exc:
        print(f"FAIL: {exc}")
        print(f"counterexample: {exc.counterexample!r}")
        return EXIT_INTERNAL
    except HurwitzError as exc:
        # every input here is generated by the sweep, so this is a bug
        print(f"FAIL: sweep raised {type(exc).__name__}: {exc}")
        print(f"counterexample: {exc}")
        return EXIT_INTERNAL
    for note in notes:
        print(f"# {note}")
    for prop in sorted(counts):
        suffix = "  (vacuous: no cases)" if counts[prop] == 0 else ""
        print(f"{prop}: {counts[prop]} cases ok{suffix}")
    print(f"all properties hold ({time.perf_counter() - start:.1f}s)")
    return EXIT_OK


def cmd_twist(args) -> int:
    n = check_order(args.order)
    k = HurwitzDatum.from_residues(n, _int_list(args.k))
    if args.r is None:
        kr = BranchingDatum.unmarked(k)
    else:
        kr = BranchingDatum(k, tuple(_int_list(args.r)))
    u = check_unit(args.unit, n)
    out = {
        "n": n,
        "unit": u,
        "input": _datum_dict(kr),
        "twisted": _datum_dict(unit_twist(kr, u)),
        "canonical": _datum_dict(canonicalize(kr)),
        "etale_part": etale_part(n, k),
    }
    try:
        out["determined_exponent_modulus"] = galois.determined_exponent_modulus(n, k.exponents)
        out["inertia_exponent_solutions"] = galois.inertia_exponent_solutions(n, k.exponents, u)
    except EmptyInertia:
        out["determined_exponent_modulus"] = None
        out["inertia_exponent_solutions"] = None
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_kummer(args) -> int:
    n = check_order(args.order)
    div = kummer.parse_divisor(n, args.divisor)
    points, k = kummer.branch_data(div)
    d = etale_part(n, k)
    out = {
        "n": n,
        "divisor": kummer.format_divisor(div),
        "branch_points": [{"point": p, "exponent": e} for p, e in points],
        "nu": k.nu,
        "k": list(k.exponents),
        "etale_part": d,
        "connected": d == 1,
        # genus over the projective line; only meaningful for a connected cover
        "genus": rh_genus(n, 0, k) if d == 1 else None,
        "generic_galois_group_order": kummer.generic_galois_group_order(k),
    }
    if args.mark is not None:
        marked = [p.strip() for p in args.mark.split(",") if p.strip()]
        kr = kummer.marking_vector(div, marked)
        out["marked_points"] = marked
        out["r"] = list(kr.r)
        out["m"] = marked_degree(n, kr.r)
        out["psi_degree"] = psi_degree(kr)
        out["canonical"] = _datum_dict(canonicalize(kr))
    print(json.dumps(out, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclic-loci",
        description="Components of cyclic special loci of moduli spaces of marked curves.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("atlas", help="list the components for given (g, m, n)")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--marks", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--no-etale-only", action="store_true",
                   help="keep only components without etale factorization")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("check", help="run the consistency sweeps")
    p.add_argument("--max-genus", type=int, default=4)
    p.add_argument("--max-order", type=int, default=8)
    p.add_argument("--max-marks", type=int, default=4)
    p.add_argument("--max-prime-genus", type=int, default=2,
                   help="quotient genus range of the datum-level oracle sweep")
    p.add_argument("--max-branch", type=int, default=6,
                   help="branch point count range of the datum-level sweeps")
    p.add_argument("--galois-order", type=int, default=24)
    p.add_argument("--galois-length", type=int, default=4)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("twist", help="unit twist, canonical form and exponent congruences")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--k", required=True, help="comma-separated exponents")
    p.add_argument("--r", help="comma-separated marking vector of length n")
    p.add_argument("--unit", type=int, required=True)
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("kummer", help="branch data of w^n = alpha from div(alpha)")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--divisor", required=True, help='e.g. "1:3,-1:2,inf:-5"')
    p.add_argument("--mark", help="comma-separated quotient points whose fibres are marked")
    p.set_defaults(func=cmd_kummer)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ConsistencyFailure as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        print(f"counterexample: {exc.counterexample!r}", file=sys.stderr)
        return EXIT_INTERNAL
    except (HurwitzError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
