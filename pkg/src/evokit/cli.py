"""Command line front end.

Thin client over the service handlers: it parses flags and files into
the same request models the HTTP endpoints accept, calls the shared
handler, and renders the response model as text (or JSON with --json).
Reports are deterministic for identical inputs.

Exit status: 0 on success, 1 on domain errors (singular matrix, bad
file, dimension mismatch), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .errors import EvokitError, FormatError
from .exact import parse_rational
from .serialization import algebra_document, dump_document, load_algebra_file, load_matrix_file
from .service import handlers, models


def _algebra_model(path: str) -> models.AlgebraDocument:
    return models.AlgebraDocument(**algebra_document(load_algebra_file(path)))


def _matrix_model(path: str) -> models.MatrixDocument:
    return models.MatrixDocument(rows=load_matrix_file(path).to_strings())


def _parse_point(text: str) -> list[str]:
    parts = [p.strip() for p in text.split(",")]
    for part in parts:
        parse_rational(part)  # validates; raises FormatError on bad input
    return parts


def _print_matrix(rows: list[list[str]]) -> None:
    for row in rows:
        print("[" + ", ".join(row) + "]")


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit(report, as_json: bool, renderer) -> None:
    if as_json:
        print(report.model_dump_json(indent=2))
    else:
        renderer(report)


def _render_info(report: models.InfoReport) -> None:
    print(f"dim: {report.dim}")
    print(f"kind: {report.kind}")
    for name, holds in report.identities.items():
        print(f"{name}: {_yesno(holds)}")
    for chain in report.chains:
        dims = ", ".join(str(d) for d in chain.dims)
        if chain.reaches_zero:
            verdict = f"reaches zero at step {chain.index}"
        else:
            verdict = f"stabilizes at dimension {chain.stable_dim}"
        print(f"{chain.kind} chain: dims {dims}; {verdict}")
    if report.dim_square is not None:
        print(f"dim of square: {report.dim_square}")
    if report.triangularizable is not None:
        print(f"triangularizable: {_yesno(report.triangularizable)}")


def _render_approx(report: models.ApproxReport) -> None:
    if report.symbolic:
        print(f"{report.variant} approximation, symbolic forms:")
        _print_matrix(report.forms)
    else:
        print(f"{report.variant} approximation at point ({', '.join(report.point)}):")
        _print_matrix(report.matrix)


def _render_exists(report: models.ExistenceReportModel) -> None:
    if report.verdict == "solution":
        print(f"SOLUTION x = ({', '.join(report.point)})")
    elif report.verdict == "no_nonzero_solution":
        print("NO NONZERO SOLUTION (only x = 0 satisfies the system)")
    else:
        print("NO SOLUTION")
    blocks = ", ".join(str(p) for p in report.invertible_blocks) or "none"
    print(f"invertible blocks: {blocks}")
    print(f"invertible blocks agree: {_yesno(report.invertible_blocks_agree)}")
    print(f"singular blocks consistent: {_yesno(report.singular_blocks_consistent)}")
    print(f"stacked system: {report.stacked_status}")
    if not report.conditions_match_verdict:
        print("warning: block conditions disagree with the stacked verdict")


def _render_nilpotent(report: models.NilpotentReport) -> None:
    if report.symbolic:
        if report.right_nilpotent:
            print("RIGHT NILPOTENT for all x")
        else:
            print("NOT RIGHT NILPOTENT for generic x")
        return
    if report.right_nilpotent:
        print(f"RIGHT NILPOTENT (index {report.index})")
        if report.permutation:
            print("triangularizing order: " + ", ".join(str(i) for i in report.permutation))
    else:
        print("NOT RIGHT NILPOTENT")
        if report.cycle:
            print("cycle: " + " -> ".join(str(i) for i in report.cycle))


def _render_iso(report: models.IsoReport) -> None:
    if report.mode == "witness":
        print("WITNESS ACCEPTED" if report.verified else "WITNESS REJECTED")
        return
    if report.status == "witness":
        print("MONOMIAL WITNESS FOUND")
        _print_matrix(report.witness)
        print("permutation: " + ", ".join(str(i) for i in report.sigma))
        print("scales: " + ", ".join(report.scales))
    elif report.status == "none_over_rationals":
        print("NO MONOMIAL ISOMORPHISM OVER THE RATIONALS")
    else:
        print("NO MONOMIAL ISOMORPHISM OVER THE REALS")
        for o in report.obstructions:
            sigma = ", ".join(str(i) for i in o.sigma)
            print(f"permutation ({sigma}): {o.kind} obstruction: {o.description}")


def _render_verify(report: models.VerifyReport) -> None:
    total = 0
    failed = 0
    for suite in report.suites:
        for check in suite.checks:
            total += 1
            status = "PASS" if check.passed else "FAIL"
            if not check.passed:
                failed += 1
            line = f"[{status}] {suite.suite}: {check.name}"
            if check.detail:
                line += f" ({check.detail})"
            print(line)
    if report.all_passed:
        print(f"all {total} checks passed")
    else:
        print(f"{failed} of {total} checks FAILED")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evokit",
        description="Exact analysis of finite-dimensional algebras and their "
        "evolution-algebra approximations.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("info", help="summary of an algebra file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("approx", help="evolution-algebra approximation at a point")
    p.add_argument("file")
    p.add_argument("--point", help="comma-separated rationals, e.g. 1,1/2,-3")
    p.add_argument("--transposed", action="store_true")
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("exists", help="which points approximate to a given evolution algebra")
    p.add_argument("algebra_file")
    p.add_argument("evolution_file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("nilpotent", help="right-nilpotency analysis")
    p.add_argument("file")
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--transposed", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("iso", help="isomorphism witness check or monomial search")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--witness", metavar="MATRIX_FILE")
    p.add_argument("--monomial", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("distance", help="sup-norm distance between structure tensors")
    p.add_argument("file_a")
    p.add_argument("file_b")

    p = sub.add_parser("catalog", help="list built-in algebras or export one")
    p.add_argument("name", nargs="?")
    p.add_argument("--param", action="append", default=[], metavar="K=V")

    p = sub.add_parser("verify", help="run the built-in verification suites")
    p.add_argument(
        "suite", nargs="?", default="all",
        choices=["section2", "leibniz", "canonical", "all"],
    )
    return parser


def run(argv: Sequence[str]) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        if args.verb == "info":
            report = handlers.info(models.InfoRequest(algebra=_algebra_model(args.file)))
            _emit(report, args.json, _render_info)
        elif args.verb == "approx":
            if not args.symbolic and args.point is None:
                parser.error("approx needs --point unless --symbolic is given")
            request = models.ApproxRequest(
                algebra=_algebra_model(args.file),
                point=_parse_point(args.point) if args.point is not None else None,
                transposed=args.transposed,
                symbolic=args.symbolic,
            )
            _emit(handlers.approx(request), args.json, _render_approx)
        elif args.verb == "exists":
            request = models.ExistsRequest(
                algebra=_algebra_model(args.algebra_file),
                target=_algebra_model(args.evolution_file),
            )
            _emit(handlers.exists(request), args.json, _render_exists)
        elif args.verb == "nilpotent":
            if args.transposed and not args.symbolic:
                parser.error("--transposed only applies to --symbolic")
            request = models.NilpotentRequest(
                algebra=_algebra_model(args.file),
                symbolic=args.symbolic,
                transposed=args.transposed,
            )
            _emit(handlers.nilpotent(request), args.json, _render_nilpotent)
        elif args.verb == "iso":
            if bool(args.witness) == bool(args.monomial):
                parser.error("iso needs exactly one of --witness or --monomial")
            request = models.IsoRequest(
                left=_algebra_model(args.file_a),
                right=_algebra_model(args.file_b),
                witness=_matrix_model(args.witness) if args.witness else None,
                monomial=args.monomial,
            )
            _emit(handlers.iso(request), args.json, _render_iso)
        elif args.verb == "distance":
            request = models.DistanceRequest(
                left=_algebra_model(args.file_a),
                right=_algebra_model(args.file_b),
            )
            print(handlers.distance(request).distance)
        elif args.verb == "catalog":
            if args.name is None:
                if args.param:
                    parser.error("--param needs a catalog name")
                listing = handlers.catalog_list()
                for name in listing.names:
                    required = listing.required_params.get(name)
                    if required:
                        print(f"{name} (params: {', '.join(required)})")
                    else:
                        print(name)
            else:
                params = {}
                for item in args.param:
                    if "=" not in item:
                        parser.error(f"bad --param {item!r}, expected K=V")
                    key, value = item.split("=", 1)
                    params[key] = value
                entry = handlers.catalog_entry(
                    models.CatalogEntryRequest(name=args.name, params=params)
                )
                print(dump_document(entry.document.model_dump(exclude_none=True)))
        elif args.verb == "verify":
            report = handlers.verify(models.VerifyRequest(suite=args.suite))
            _render_verify(report)
            return 0 if report.all_passed else 1
    except EvokitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
