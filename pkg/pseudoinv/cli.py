"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 math-domain error, 4 cross-method disagreement.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Sequence

from pseudoinv.config.manager import config_manager
from pseudoinv.core.errors import PseudoInvError
from pseudoinv.services import reports
from pseudoinv.services.bfun import MethodDisagreement
from pseudoinv.services.specs import UsageError, check_precision, resolve_spec
from pseudoinv.services.verify import SUITES, verify_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_MATH = 3
EXIT_DISAGREEMENT = 4


def _add_spec_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--name", help="named worked example")
    group.add_argument("--spec", help="inline JSON spec")
    group.add_argument("--spec-file", help="path to a JSON spec")


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-N", "--precision", type=int, default=None, help="highest index computed")
    parser.add_argument("--format", choices=reports.FORMATS, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pseudoinv", description="Exact Riordan pseudo-involution toolkit")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    commands = parser.add_subparsers(dest="command", required=True)

    series = commands.add_parser("series", help="g, its companion f and a certificate")
    _add_spec_arguments(series)
    _add_common_arguments(series)

    bfun = commands.add_parser("bfun", help="B-sequence by several methods")
    _add_spec_arguments(bfun)
    _add_common_arguments(bfun)
    bfun.add_argument("--methods", help="comma list: definition,matrix,half,gamma,rational")
    bfun.add_argument("--beta", action="store_true", help="also print beta_n = (2n+1)! b_n")

    matrix = commands.add_parser("matrix", help="rows of a Riordan array or polynomial family")
    _add_spec_arguments(matrix, required=False)
    matrix.add_argument("--cheb", help="polynomial family: p, P, Q, R, T or U")
    matrix.add_argument("--flavor", choices=("ordinary", "exponential"), default=None)
    _add_common_arguments(matrix)

    verify = commands.add_parser("verify", help="run an acceptance suite")
    verify.add_argument("suite", help=f"one of {', '.join(SUITES)}")
    verify.add_argument("--format", choices=reports.FORMATS, default=None)

    serve = commands.add_parser("serve", help="start the HTTP API")
    serve.add_argument("--port", type=int, default=None)
    serve.add_argument("--debug", action="store_true")
    return parser


def _configure_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, str(config_manager.get("logging", "level", "WARNING")).upper(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _precision(args: argparse.Namespace) -> int:
    N = args.precision if args.precision is not None else int(config_manager.get("precision", "default", 16))
    return check_precision(N)


def _spec(args: argparse.Namespace):
    return resolve_spec(args.name, args.spec, args.spec_file)


def cmd_series(args: argparse.Namespace) -> int:
    report = reports.series_report(_spec(args), _precision(args))
    print(reports.render(report, args.format))
    if report["error"] is not None:
        print(f"error: {report['error']['message']}", file=sys.stderr)
        return EXIT_MATH
    return EXIT_OK


def cmd_bfun(args: argparse.Namespace) -> int:
    report = reports.bfun_report(_spec(args), _precision(args), args.methods, beta=args.beta)
    print(reports.render(report, args.format))
    if not report["agree"]:
        diff = report["first_difference"]
        first, second = diff["methods"]
        print(f"error: methods {first} and {second} disagree at b_{diff['index']}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> int:
    N = _precision(args)
    if args.cheb:
        if args.name or args.spec or args.spec_file:
            raise UsageError("--cheb cannot be combined with a spec")
        report = reports.matrix_report(None, N, cheb=args.cheb)
    else:
        report = reports.matrix_report(_spec(args), N, args.flavor)
    print(reports.render(report, args.format))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify_report(args.suite)
    print(reports.render(report, args.format))
    if not report["passed"]:
        for name in report["failures"]:
            print(f"FAILED {name}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    from pseudoinv import create_app

    app = create_app()
    port = args.port or int(config_manager.get("server", "port", 5010))
    app.run(debug=args.debug or bool(config_manager.get("server", "debug", False)), port=port)
    return EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "series": cmd_series,
    "bfun": cmd_bfun,
    "matrix": cmd_matrix,
    "verify": cmd_verify,
    "serve": cmd_serve,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MethodDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except PseudoInvError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
