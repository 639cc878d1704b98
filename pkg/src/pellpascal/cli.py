"""Command-line front end: every capability as a reproducible subcommand
with machine-readable output.

Exit codes: 0 success, 1 invalid configuration, 2 internal assertion
failure.  Defaults: bound 10^6 (override with PELLPASCAL_BOUND), domain
quarters, sieves auto-selected per family, one worker.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import contfrac, identities, pascal, pell, reproduce, search, sieve
from .exactnum import AlgebraicRoot
from .search import MedianDomain


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _default_bound() -> int:
    return int(os.environ.get("PELLPASCAL_BOUND", 10**6))


def _default_bits() -> int:
    return int(os.environ.get("PELLPASCAL_PRECISION_BITS", 128))


def _emit(doc, fmt: str, csv_text: str | None = None):
    if fmt == "csv":
        if csv_text is None:
            raise _UsageError("csv output is not available for this subcommand")
        sys.stdout.write(csv_text)
    elif fmt == "text":
        sys.stdout.write(_as_text(doc))
    else:
        json.dump(doc, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")


def _as_text(doc, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(doc, dict):
        return "".join(
            f"{pad}{k}:\n{_as_text(v, indent + 1)}" if isinstance(v, (dict, list))
            else f"{pad}{k}: {v}\n"
            for k, v in doc.items()
        )
    if isinstance(doc, list):
        return "".join(
            _as_text(v, indent) if isinstance(v, (dict, list)) else f"{pad}- {v}\n"
            for v in doc
        )
    return f"{pad}{doc}\n"


def _family_from(args) -> pascal.EquationFamily:
    return pascal.family(args.k, args.quartile)


def build_parser() -> _Parser:
    parser = _Parser(prog="pellpascal", description=__doc__)
    parser.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="exhaustive sieved search for one family")
    p.add_argument("--k", type=int, required=True, choices=range(2, 7))
    p.add_argument("--quartile", choices=("median", "q1", "q3"), default="median")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--domain", choices=("integers", "halves", "quarters"), default="quarters")
    p.add_argument("--sieves", default="auto",
                   help="'auto', 'none', or comma-separated moduli")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("pell", help="units, solution classes, reference verification")
    ps = p.add_subparsers(dest="action", required=True)
    pu = ps.add_parser("unit")
    pu.add_argument("--d", type=int, required=True)
    pc = ps.add_parser("classes")
    pc.add_argument("--d", type=int, required=True)
    pc.add_argument("--c", type=int, required=True)
    pc.add_argument("--bound", type=int, default=None)
    pc.add_argument("--unit-power", type=int, default=1)
    pc.add_argument("--keep-conjugates", action="store_true")
    pc.add_argument("--odd-y", action="store_true")
    pc.add_argument("--terms", type=int, default=6)
    ps.add_parser("verify")

    p = sub.add_parser("cf", help="certified continued fractions")
    cs = p.add_subparsers(dest="action", required=True)
    ce = cs.add_parser("expand")
    ce.add_argument("--base", type=Fraction, required=True)
    ce.add_argument("--index", type=int, required=True)
    ce.add_argument("--terms", type=int, default=12)
    cc = cs.add_parser("convergents")
    cc.add_argument("--base", type=Fraction, required=True)
    cc.add_argument("--index", type=int, required=True)
    cc.add_argument("--terms", type=int, default=12)
    ct = cs.add_parser("table")
    ct.add_argument("--terms", type=int, default=16)

    p = sub.add_parser("sieve", help="residue tables and emptiness certificates")
    ss = p.add_subparsers(dest="action", required=True)
    st = ss.add_parser("table")
    st.add_argument("--curve", required=True, choices=pascal.curve_names())
    st.add_argument("--modulus", type=int, required=True)
    st.add_argument("--pairs", action="store_true")
    sp = ss.add_parser("prune")
    sp.add_argument("--curve", required=True, choices=pascal.curve_names())
    sp.add_argument("--modulus", type=int, required=True)
    se = ss.add_parser("prove-empty")
    se.add_argument("--curve", required=True, choices=pascal.curve_names())
    se.add_argument("--moduli", required=True, help="comma-separated moduli")

    p = sub.add_parser("quasi", help="quasi-solutions from convergents")
    p.add_argument("--k", type=int, required=True, choices=range(2, 7))
    p.add_argument("--quartile", choices=("median", "q1", "q3"), default="median")
    p.add_argument("--track", default=None)
    p.add_argument("--count", type=int, default=10)

    sub.add_parser("identities", help="run every identity check; emit the errata report")

    p = sub.add_parser("reproduce", help="full reproduction suite")
    p.add_argument("--bound", type=int, default=20000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--orbit-limit", type=int, default=10**16)
    p.add_argument("--surface-limit", type=int, default=10**5)
    return parser


def _run_search(args) -> dict:
    fam = _family_from(args)
    bound = args.bound if args.bound is not None else _default_bound()
    if bound < 2:
        raise _UsageError("--bound must be >= 2")
    if args.sieves == "auto":
        sieves = "auto"
    elif args.sieves == "none":
        sieves = None
    else:
        try:
            sieves = [int(s) for s in args.sieves.split(",")]
        except ValueError:
            raise _UsageError(f"bad sieve list {args.sieves!r}") from None
        if any(s < 2 for s in sieves):
            raise _UsageError("sieve moduli must be >= 2")
    rep = search.exhaustive(fam, bound, MedianDomain[args.domain.upper()],
                            sieves=sieves, workers=args.workers)
    return search.report_json(rep)


def _run_pell(args) -> dict:
    if args.action == "unit":
        u = pell.fundamental_unit(args.d)
        return {
            "schema": "pellpascal/pell-unit/v1",
            "d": args.d,
            "plus_one": [str(v) for v in u.plus_one],
            "minus_one": [str(v) for v in u.minus_one] if u.minus_one else None,
        }
    if args.action == "classes":
        bound = args.bound if args.bound is not None else 10**6
        unit = pell.fundamental_unit(args.d).plus_one
        if args.unit_power != 1:
            unit = pell._unit_power(args.d, unit, args.unit_power)
        classes = pell.class_sequences(
            pell.PellProblem(args.d, args.c), bound, unit=unit,
            merge_conjugates=not args.keep_conjugates,
            y_filter=(lambda y: y % 2 == 1) if args.odd_y else None,
        )
        return {
            "schema": "pellpascal/pell-classes/v1",
            "d": args.d, "c": args.c, "seed_bound": str(bound),
            "classes": [
                {
                    "seed": [str(v) for v in cls.seed],
                    "unit": [str(v) for v in cls.unit],
                    "terms": [
                        {"alpha": i, "x": str(x), "y": str(y)}
                        for i, (x, y) in enumerate(pell.generate(cls, args.terms))
                    ],
                }
                for cls in classes
            ],
        }
    return {"schema": "pellpascal/pell-verify/v1", **pell.verify_reference_sequences()}


def _run_cf(args) -> tuple[dict, str | None]:
    if args.action == "table":
        report = contfrac.approximation_table(args.terms)
        report["schema"] = "pellpascal/cf-table/v1"
        return report, contfrac.table_csv(report)
    root = AlgebraicRoot(args.base, args.index)
    exp = contfrac.expand(root, args.terms)
    if args.action == "expand":
        return {
            "schema": "pellpascal/cf-expand/v1",
            "constant": str(root),
            "quotients": list(exp.quotients),
            "certified_bits": exp.certified_bits,
        }, None
    convs = contfrac.convergents(exp)
    return {
        "schema": "pellpascal/cf-convergents/v1",
        "constant": str(root),
        "convergents": [{"index": c.index, "p": str(c.p), "q": str(c.q)} for c in convs],
    }, None


def _run_sieve(args) -> dict:
    curve_poly = pascal.curve_by_name(args.curve)
    if args.action == "prove-empty":
        try:
            moduli = [int(s) for s in args.moduli.split(",")]
        except ValueError:
            raise _UsageError(f"bad moduli list {args.moduli!r}") from None
        if any(p < 2 for p in moduli):
            raise _UsageError("moduli must be >= 2")
        cert = sieve.prove_empty(curve_poly, moduli)
        return {
            "schema": "pellpascal/sieve-empty/v1",
            "curve": args.curve,
            "moduli": moduli,
            "certificate": cert,
            "rechecked": sieve.recheck_empty(curve_poly, cert) if cert else None,
        }
    if args.modulus < 2:
        raise _UsageError("--modulus must be >= 2")
    table = sieve.admissible_table(curve_poly, args.modulus)
    doc = sieve.table_json(table, include_pairs=getattr(args, "pairs", False))
    doc["schema"] = "pellpascal/sieve-table/v1"
    doc["name"] = args.curve
    return doc


def _run_quasi(args) -> dict:
    fam = _family_from(args)
    entries = search.quasi_generate(fam, args.count, args.track)
    return {
        "schema": "pellpascal/quasi/v1",
        "family": fam.name,
        "track": args.track or search.quasi_tracks(fam)[0],
        "entries": [
            {"index": e.index, "p": str(e.p), "q": str(e.q), "n": str(e.n),
             "m_quarters": str(e.m.quarters), "on_grid": e.on_grid,
             "residual": str(e.residual), "order_ratio": str(e.order_ratio)}
            for e in entries
        ],
    }


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        csv_text = None
        if args.command == "search":
            doc = _run_search(args)
        elif args.command == "pell":
            doc = _run_pell(args)
        elif args.command == "cf":
            doc, csv_text = _run_cf(args)
        elif args.command == "sieve":
            doc = _run_sieve(args)
        elif args.command == "quasi":
            doc = _run_quasi(args)
        elif args.command == "identities":
            doc = {
                "schema": "pellpascal/identities/v1",
                "findings": [f.to_json() for f in identities.run_identity_suite()],
            }
            csv_text = identities.curve_table_csv()
        elif args.command == "reproduce":
            doc = reproduce.reproduce(
                bound=args.bound, workers=args.workers,
                orbit_limit=args.orbit_limit, surface_limit=args.surface_limit,
            )
        else:  # pragma: no cover
            raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, pascal.NoTabulatedCurve) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:  # internal invariant broken
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    _emit(doc, args.format, csv_text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
