"""Command line: ``idealgb compute | bench | verify``.

Exit codes: 0 success, 1 unreadable/malformed input, 2 invalid problem
(duplicate points, D-invariance violation, linear dependence, no conditions),
3 a verified result failed certification, 4 benchmark disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import format_table, run_bench
from .errors import InvalidProblem
from .gbuilder import groebner_hermite
from .oracle import certify
from .polyring import format_monomial, format_poly
from .problemfile import ProblemFileError, load_json, load_problem, result_from_doc, result_to_doc

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_UNCERTIFIED, EXIT_BENCH = 0, 1, 2, 3, 4


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _str_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="idealgb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="reduced Groebner basis for a problem file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--verify", choices=("none", "spairs", "oracle"), default="spairs")
    p.add_argument("--skip-d-invariance", action="store_true",
                   help="do not check that each functional space is closed under differentiation")

    p = sub.add_parser("bench", help="time pipeline vs Buchberger-Moeller on random points")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--dims", type=_int_list, default=[2])
    p.add_argument("--sizes", type=_int_list, default=[4, 8, 16])
    p.add_argument("--orderings", type=_str_list, default=["grlex"])
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="re-certify a JSON result written by compute")
    p.add_argument("file")
    return parser


def _text_report(result, variables) -> str:
    o = result.ordering
    mono = lambda m: format_monomial(m, variables)  # noqa: E731
    lines = [
        f"ordering: {o.describe(variables)}",
        f"quotient basis ({len(result.quotient_basis)}): "
        + ", ".join(mono(m) for m in result.quotient_basis),
        f"leading monomials ({len(result.leading_monomials)}): "
        + ", ".join(mono(m) for m in result.leading_monomials),
        "reduced Groebner basis:",
    ]
    lines += [f"  {format_poly(g, o, variables)}" for g in result.basis]
    if result.certificate is not None:
        lines.append("certificate:")
        lines += [f"  {s}" for s in result.certificate.summary().splitlines()]
    return "\n".join(lines)


def cmd_compute(args) -> int:
    try:
        problem = load_problem(args.file)
        result = groebner_hermite(problem, check_d_invariance=not args.skip_d_invariance)
    except ProblemFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidProblem as exc:
        print(f"invalid problem: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.verify != "none":
        certify(result, against_oracle=args.verify == "oracle")
    v = problem.variables
    if args.format == "json":
        print(json.dumps(result_to_doc(result, v), indent=2))
    else:
        print(_text_report(result, v))
    if result.certificate is not None and not result.certificate.certified:
        return EXIT_UNCERTIFIED
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = run_bench(args.seed, args.dims, args.sizes, args.orderings, args.repeats, args.jobs)
    if args.format == "json":
        print(json.dumps([dict(vars(r), ratio=r.ratio) for r in rows], indent=2))
    else:
        print(format_table(rows))
    if not all(r.equal for r in rows):
        print("error: pipeline and oracle disagree", file=sys.stderr)
        return EXIT_BENCH
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        result = result_from_doc(load_json(args.file))
    except ProblemFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidProblem as exc:
        print(f"invalid problem: {exc}", file=sys.stderr)
        return EXIT_INVALID
    cert = certify(result)
    print(cert.summary())
    return EXIT_OK if cert.certified else EXIT_UNCERTIFIED


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return {"compute": cmd_compute, "bench": cmd_bench, "verify": cmd_verify}[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
