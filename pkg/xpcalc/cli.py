"""
xpcalc - Command Line
One subcommand per algorithm. Reports go to stdout, logs to stderr.

    python cli.py identities ../data/codes/hypercube.code -t 3
    python cli.py search ../data/codes/hypercube.code -t 3 --target "CCZ[0,1,2]"
    python cli.py construct --target "CS[0,1]" -d 2

Exit codes: 0 found, 1 not found / not logical / budget exhausted, 2 input error.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from config import RunConfig
from managers import EXIT_INPUT_ERROR, RunManager
from models import XpCalcError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def _add_level(parser: argparse.ArgumentParser):
    parser.add_argument("-t", "--level", type=int, default=1, help="Clifford level t, precision N = 2^t (default: 1)")


def _add_format(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=("text", "json"), default="text", help="Report format (default: text)")
    parser.add_argument("--no-verify", action="store_true", help="Skip the oracle check of positive results")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xpcalc", description="Diagonal logical operators of CSS codes.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="INFO logging, -vv for DEBUG")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def code_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("code", help="Code file (SX / LX sections)")
        _add_level(sub)
        _add_format(sub)
        return sub

    code_command("identities", "Logical identities K_M")
    code_command("search", "Operator with a given logical action").add_argument(
        "--target", required=True, help='Gate string on the logical qubits, e.g. "CCZ[0,1,2]"')
    code_command("test", "Logical operator test").add_argument(
        "--z", required=True, help="Z-component as digits, e.g. 02060602")
    code_command("generators", "Logical identities and action table")
    code_command("action", "Logical action of a diagonal operator").add_argument(
        "--z", required=True, help="Z-component as digits")
    depth_one = code_command("depth-one", "Depth-one implementation search")
    depth_one.add_argument("--cycles", help='Embedding from a permutation, e.g. "(0,3)(1,2)"')
    depth_one.add_argument("--budget", type=int, help="Node budget of the search")
    depth_one.add_argument("--same-action", action="store_true", help="Keep the exact action of the generator")
    code_command("canonical", "Canonical implementation of a logical target").add_argument(
        "--target", required=True, help="Gate string on the logical qubits")
    code_command("info", "Code parameters, matrices and distances")

    construct = subparsers.add_parser("construct", help="Code with a transversal logical target")
    construct.add_argument("--target", required=True, help='Gate string, e.g. "CS[0,1]"')
    construct.add_argument("-d", "--distance", default="2", help="Toric code distance (default: 2)")
    _add_format(construct)

    noncss = subparsers.add_parser("noncss", help="Map a Pauli stabiliser code to a CSS code")
    noncss.add_argument("code", help="Stabiliser file, one Pauli string per line")
    _add_format(noncss)

    toric = subparsers.add_parser("toric", help="Write a toric code")
    toric.add_argument("-k", type=int, default=2, help="Lattice dimension (default: 2)")
    toric.add_argument("-d", "--distance", default="2", help="Distance (default: 2)")
    _add_format(toric)

    table = subparsers.add_parser("table", help="Construction table for S, CZ, T, CS and CCZ")
    table.add_argument("-d", "--distance", default="2,3", help="Comma separated distances (default: 2,3)")
    _add_format(table)

    serve = subparsers.add_parser("serve", help="Run the HTTP API")
    serve.add_argument("--host", default="0.0.0.0")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def configure_logging(verbosity: int):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def serve(host: str, port: int) -> int:
    import uvicorn
    from main import app

    uvicorn.run(app, host=host, port=port)
    return 0


def main(argv: Optional[List[str]] = None, manager: Optional[RunManager] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    if args.command == "serve":
        return serve(args.host, args.port)

    try:
        config = RunConfig.from_args(args)
        source = None
        if config.code_path is not None:
            source = config.code_path.read_text(encoding="utf-8")
        report = (manager or RunManager()).run(config, source)
    except (XpCalcError, ValueError, OSError) as err:
        logger.debug("Input error", exc_info=True)
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    if config.output_format == "json":
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        sys.stdout.write(report.text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
