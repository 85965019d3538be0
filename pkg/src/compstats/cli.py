"""Command-line front end: tables, bijection round-trips, verification suites, OEIS checks.

Exit codes: 0 success, 1 verification failure or value mismatch, 2 usage or
parse error.  Output is deterministic: identical inputs produce identical
bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import distributions, oeis
from .compositions import (
    all_compositions,
    composition_stats,
    format_composition,
    macmahon_forward,
    macmahon_inverse,
    parse_composition,
    reversed_composition,
    sorting_permutation,
    statistic_distribution as composition_distribution,
)
from .errors import BFileParseError, CompstatsError, NetworkUnavailable, UnknownSequence
from .permutations import (
    all_permutations,
    foata,
    foata_inverse,
    format_permutation,
    inverse_permutation,
    permutation_stats,
    statistic_distribution as permutation_distribution,
)
from .polynomial import Poly, monomial_exponents

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

HK_LIMIT = 8
TABLE_LIMIT = 24

# grid output mirrors the published row-per-n tables: inversions are shown
# for r <= 12 and descents for r <= 5, zero-padded
GRID_COLUMNS = {"ic": 13, "dc": 6}

VERIFY_SUITES = ("all", "prod", "geneuler", "genfuncid", "lemma", "macmahon",
                 "jointstat", "foata", "equidist")


# ---------------------------------------------------------------------------
# hk
# ---------------------------------------------------------------------------

def cmd_hk(args: argparse.Namespace) -> int:
    poly = distributions.maj_inv_poly(args.k)
    if args.format == "json":
        print(json.dumps({"k": args.k, "terms": poly.to_json_obj()}))
    else:
        print(poly)
    return EXIT_OK


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _render_grid(table: distributions.DistTable, columns: int) -> str:
    header = ["n/r"] + [str(r) for r in range(columns)]
    rows = [header]
    for n in range(table.cap + 1):
        rows.append([str(n)] + [str(table.count(n, r)) for r in range(columns)])
    widths = [max(len(row[i]) for row in rows) for i in range(columns + 1)]
    lines = ["  ".join(cell.rjust(width) for cell, width in zip(row, widths))
             for row in rows]
    return "\n".join(lines) + "\n"


def cmd_table(args: argparse.Namespace) -> int:
    if args.kind == "ic":
        table = distributions.DistTable.inversions(args.max_n, k=args.k)
    else:
        table = distributions.DistTable.descents(args.max_n, k=args.k)
    if args.format == "csv":
        sys.stdout.write(table.to_csv(dense=args.dense))
    elif args.format == "json":
        print(table.to_json())
    else:
        sys.stdout.write(_render_grid(table, GRID_COLUMNS[args.kind]))
    return EXIT_OK


# ---------------------------------------------------------------------------
# bij
# ---------------------------------------------------------------------------

def cmd_bij(args: argparse.Namespace) -> int:
    sigma = parse_composition(args.composition)
    if not sigma:
        raise CompstatsError("the empty composition is not in the bijection's domain")
    pi, lam = macmahon_forward(sigma)
    mu = tuple(sigma[i - 1] for i in pi)
    maj = permutation_stats(pi).maj
    reconstructed = macmahon_inverse(pi, lam)
    print(f"composition:   {format_composition(sigma)}")
    print(f"sum:           {sum(sigma)}")
    print(f"permutation:   {format_permutation(pi)}")
    print(f"sorted mu:     {format_composition(mu)}")
    print(f"partition:     {format_composition(lam)}")
    print(f"maj(perm):     {maj}")
    print(f"|partition|:   {sum(lam)}")
    print(f"round-trip:    {format_composition(reconstructed)}")
    if sum(lam) + maj != sum(sigma) or reconstructed != sigma:
        print("check:         FAILED")
        return EXIT_VERIFY_FAILED
    print(f"check:         |partition| + maj = {sum(lam)} + {maj} = {sum(sigma)} = sum")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _first_poly_difference(a: Poly, b: Poly) -> str:
    diff = a - b
    key, _ = next(diff.terms())
    exponents = monomial_exponents(key)
    return (f"coefficient {exponents}: expected {b.coeff(**exponents)}, "
            f"got {a.coeff(**exponents)}")


def _check_prod(max_t: int, cap: int) -> tuple[bool, str]:
    for k in range(max_t + 1):
        if not distributions.verify_product_expansion(k, cap, cap):
            return False, f"product expansion differs at t-degree {k} (caps {cap},{cap})"
    return True, f"t-degrees 0..{max_t}, caps ({cap},{cap})"


def _check_geneuler(max_order: int) -> tuple[bool, str]:
    for m in range(1, max_order + 1):
        if not distributions.verify_q_eulerian_gf(m):
            return False, f"q-Eulerian generating identity fails at order {m}"
    return True, f"orders 1..{max_order}"


def _check_genfuncid(max_k: int, cap: int) -> tuple[bool, str]:
    for k in range(max_k + 1):
        if not distributions.verify_composition_count_identity(k, cap):
            return False, f"composition-count identity fails at k={k}, cap={cap}"
    return True, f"k 0..{max_k}, cap {cap}"


def _check_lemma(max_n: int) -> tuple[bool, str]:
    for n in range(1, max_n + 1):
        for sigma in all_compositions(n):
            pi = sorting_permutation(sigma)
            pi_stats = permutation_stats(pi)
            rev = composition_stats(reversed_composition(sigma))
            pairs = (
                ("inv", pi_stats.inv, rev.inv),
                ("imaj=comaj^R", pi_stats.imaj, rev.comaj),
                ("icomaj=maj^R", pi_stats.icomaj, rev.maj),
                ("ides=des^R", pi_stats.ides, rev.des),
            )
            for label, actual, expected in pairs:
                if actual != expected:
                    return False, (f"sigma={format_composition(sigma)}: {label} "
                                   f"expected {expected}, got {actual}")
    return True, f"all compositions with sum <= {max_n}"


def _check_macmahon(max_n: int) -> tuple[bool, str]:
    for n in range(1, max_n + 1):
        for sigma in all_compositions(n):
            pi, lam = macmahon_forward(sigma)
            maj = permutation_stats(pi).maj
            if sum(lam) + maj != n:
                return False, (f"sigma={format_composition(sigma)}: "
                               f"|lambda| + maj = {sum(lam)} + {maj} != {n}")
            back = macmahon_inverse(pi, lam)
            if back != sigma:
                return False, (f"sigma={format_composition(sigma)}: round-trip "
                               f"gave {format_composition(back)}")
    return True, f"all compositions with sum <= {max_n}"


def _check_jointstat(max_k: int, cap: int) -> tuple[bool, str]:
    stats = ("sum", "inv", "comaj", "maj", "des")
    variables = ("p", "q", "t", "u", "v")
    for k in range(max_k + 1):
        closed = distributions.joint_gf(k, cap)
        brute = composition_distribution(k, cap, stats, variables)
        if closed != brute:
            return False, (f"k={k}, cap={cap}: "
                           + _first_poly_difference(closed.body, brute.body))
    return True, f"k 0..{max_k}, cap {cap}"


def _check_foata(max_k: int) -> tuple[bool, str]:
    for k in range(max_k + 1):
        for pi in all_permutations(k):
            image = foata(pi)
            if permutation_stats(pi).maj != permutation_stats(image).inv:
                return False, (f"pi={format_permutation(pi)}: maj {permutation_stats(pi).maj} "
                               f"!= inv(foata) {permutation_stats(image).inv}")
            before = permutation_stats(inverse_permutation(pi)).descent_set
            after = permutation_stats(inverse_permutation(image)).descent_set
            if before != after:
                return False, (f"pi={format_permutation(pi)}: inverse descent set "
                               f"{before} became {after}")
            if foata_inverse(image) != pi:
                return False, f"pi={format_permutation(pi)}: foata round-trip failed"
    return True, f"S_k for k 0..{max_k}"


def _check_equidist(max_k: int, cap: int) -> tuple[bool, str]:
    for k in range(max_k + 1):
        reference = permutation_distribution(k, ("imaj", "maj"), ("p", "q"))
        for stats in (("inv", "imaj"), ("maj", "inv")):
            other = permutation_distribution(k, stats, ("p", "q"))
            if other != reference:
                return False, (f"k={k}: ({stats[0]},{stats[1]}) distribution differs: "
                               + _first_poly_difference(other, reference))
        swapped = reference.rename({"p": "q", "q": "p"})
        if swapped != reference:
            return False, f"k={k}: joint distribution is not symmetric"
    comp_max_k = min(max_k, 5)
    comp_cap = min(cap, 12)
    for k in range(comp_max_k + 1):
        reference = composition_distribution(k, comp_cap, ("sum", "inv"), ("p", "q"))
        for stat in ("maj", "comaj"):
            other = composition_distribution(k, comp_cap, ("sum", stat), ("p", "q"))
            if other != reference:
                return False, (f"k={k}: (sum,{stat}) over compositions differs: "
                               + _first_poly_difference(other.body, reference.body))
    return True, (f"S_k for k 0..{max_k}; compositions k 0..{comp_max_k}, "
                  f"cap {comp_cap}")


def cmd_verify(args: argparse.Namespace) -> int:
    checks: list[tuple[str, tuple[bool, str]]] = []
    suite = args.suite

    def want(name: str) -> bool:
        return suite in ("all", name)

    if want("prod"):
        checks.append(("prod", _check_prod(args.k or 4, args.cap or 8)))
    if want("geneuler"):
        checks.append(("geneuler", _check_geneuler(args.k or 6)))
    if want("genfuncid"):
        checks.append(("genfuncid", _check_genfuncid(args.k or 5, args.cap or 12)))
    if want("lemma"):
        checks.append(("lemma", _check_lemma(args.max_n or 12)))
    if want("macmahon"):
        checks.append(("macmahon", _check_macmahon(args.max_n or 12)))
    if want("jointstat"):
        checks.append(("jointstat", _check_jointstat(args.k or 4, args.cap or 9)))
    if want("foata"):
        checks.append(("foata", _check_foata(args.k or 7)))
    if want("equidist"):
        checks.append(("equidist", _check_equidist(args.k or 7, args.cap or 12)))

    failed = False
    for name, (ok, detail) in checks:
        if ok:
            print(f"PASS {name}: {detail}")
        else:
            print(f"FAIL {name}: {detail}")
            failed = True
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


# ---------------------------------------------------------------------------
# oeis-check
# ---------------------------------------------------------------------------

def cmd_oeis_check(args: argparse.Namespace) -> int:
    if args.fetch:
        bfile = oeis.fetch_bfile(args.seq)
        metadata = None
    else:
        path = Path(args.bfile)
        bfile = oeis.load_bfile(path, sequence_id=args.seq)
        sidecar = path.parent / "metadata.json"
        metadata = oeis.load_metadata(sidecar) if sidecar.exists() else None
    report = oeis.check_sequence(args.seq, bfile, args.max_n, metadata)
    print(report.summary())
    return EXIT_OK if report.agree else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compstats",
        description="Distributions of inversions and descents over integer compositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    hk = sub.add_parser("hk", help="print the joint (maj, inv) polynomial over S_k")
    hk.add_argument("k", type=int)
    hk.add_argument("--format", choices=("text", "json"), default="text")
    hk.set_defaults(func=cmd_hk)

    table = sub.add_parser("table", help="emit a count triangle (inversions or descents)")
    table.add_argument("kind", choices=("ic", "dc"))
    table.add_argument("--max-n", type=int, required=True)
    table.add_argument("--k", type=int, default=None,
                       help="restrict to k-part compositions")
    table.add_argument("--format", choices=("csv", "json", "grid"), default="grid")
    table.add_argument("--dense", action="store_true",
                       help="pad CSV output with explicit zero entries")
    table.set_defaults(func=cmd_table)

    bij = sub.add_parser("bij", help="run the composition -> (permutation, partition) bijection")
    bij.add_argument("composition", help='comma-separated parts, e.g. "4,2,1,2,1,5,3"')
    bij.set_defaults(func=cmd_bij)

    verify = sub.add_parser("verify", help="run identity and bijection verification suites")
    verify.add_argument("--suite", choices=VERIFY_SUITES, default="all")
    verify.add_argument("--k", type=int, default=None, help="order / part-count bound")
    verify.add_argument("--cap", type=int, default=None, help="series truncation cap")
    verify.add_argument("--max-n", type=int, default=None, help="composition sum bound")
    verify.set_defaults(func=cmd_verify)

    check = sub.add_parser("oeis-check", help="compare computed values against an OEIS b-file")
    check.add_argument("--seq", required=True, help="sequence id, e.g. A189074")
    check.add_argument("--bfile", help="path to a local b-file")
    check.add_argument("--fetch", action="store_true",
                       help="download the b-file from oeis.org instead")
    check.add_argument("--max-n", type=int, default=16)
    check.set_defaults(func=cmd_oeis_check)

    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.command == "hk" and not 0 <= args.k <= HK_LIMIT:
        parser.error(f"k must be between 0 and {HK_LIMIT}")
    if args.command == "table" and not 0 <= args.max_n <= TABLE_LIMIT:
        parser.error(f"--max-n must be between 0 and {TABLE_LIMIT}")
    if args.command == "table" and args.k is not None and args.k < 0:
        parser.error("--k must be nonnegative")
    if args.command == "verify":
        for name, value in (("--k", args.k), ("--cap", args.cap), ("--max-n", args.max_n)):
            if value is not None and value < 0:
                parser.error(f"{name} must be nonnegative")
        if args.suite in ("foata", "equidist") and (args.k or 0) > 7:
            parser.error("--k is capped at 7 for permutation sweeps")
        if args.suite in ("lemma", "macmahon") and (args.max_n or 0) > 16:
            parser.error("--max-n is capped at 16 for composition sweeps")
        if args.suite == "jointstat" and (args.k or 0) > 7:
            parser.error("--k is capped at 7 for the joint distribution")
        if (args.cap or 0) > TABLE_LIMIT:
            parser.error(f"--cap is capped at {TABLE_LIMIT}")
    if args.command == "oeis-check" and not args.fetch and not args.bfile:
        parser.error("provide --bfile PATH or --fetch")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return args.func(args)
    except (BFileParseError, UnknownSequence, NetworkUnavailable,
            CompstatsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
