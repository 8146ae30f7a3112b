"""
Command-line interface.

    dualcheeger analyze  [FILE] [options]   report on a graph file (exit 0)
    dualcheeger certify  [FILE] [options]   exit 0 pass, 1 fail, 3 indeterminate
    dualcheeger generate FAMILY [options]   print a graph file

Input errors exit with 2 and a JSON error object on stderr.
"""
import argparse
import json
import sys
from typing import Any, Dict, List, Optional

from dualcheeger import __version__
from dualcheeger.cheeger import Verdict, certify
from dualcheeger.cli.generators import GENERATORS, generate
from dualcheeger.cli.report import RENDERERS, build_report
from dualcheeger.config import ConfigManager
from dualcheeger.exceptions import DualCheegerException, ValidationError, WeightSyntaxError
from dualcheeger.fields import Backend
from dualcheeger.parsing import dump_graph, parse_graph
from dualcheeger.utils.logger import logger, resolve_level, stage_timer

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT_ERROR = 2
EXIT_INDETERMINATE = 3

_EXIT_CODES = {
    Verdict.HOLDS: EXIT_PASS,
    Verdict.FAILS: EXIT_FAIL,
    Verdict.INDISTINGUISHABLE: EXIT_INDETERMINATE,
}

def _add_analysis_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('input', nargs='?', default='-', help="Graph file, '-' for stdin (default)")
    parser.add_argument('--backend', choices=[b.value for b in Backend],
                        help="Field backend, overriding the file's field tag")
    parser.add_argument('--truncation-order', dest='truncation_order',
                        help="Levi-Civita truncation budget (rational, e.g. 8 or 5/2)")
    parser.add_argument('--max-bruteforce', dest='max_bruteforce', type=int,
                        help="Largest N for the exhaustive enumeration")
    parser.add_argument('--format', choices=sorted(RENDERERS), help="Report format (default: json)")
    parser.add_argument('--workers', type=int, help="Processes for the enumeration")

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='dualcheeger',
        description="Dual Cheeger constant and normalized Laplacian spectra over ordered fields.",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--log-level', dest='log_level',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help="Logging level")
    commands = parser.add_subparsers(dest='command', required=True)

    analyze = commands.add_parser('analyze', help="Report h, the spectrum and every verdict")
    _add_analysis_options(analyze)

    certify_parser = commands.add_parser('certify', help="Check every inequality; exit code tells the outcome")
    _add_analysis_options(certify_parser)
    certify_parser.add_argument('--expect', help="JSON file with expected values (h, lambda_max, ...)")

    generate_parser = commands.add_parser('generate', help="Print a graph file for an example family")
    generate_parser.add_argument('family', choices=sorted(GENERATORS))
    generate_parser.add_argument('--n', type=int, help="Exponent, or vertex count for complete-unit")
    generate_parser.add_argument('--k', type=int, help="Part size for near-bipartite-complete")
    generate_parser.add_argument('--backend', choices=[b.value for b in Backend])
    return parser

def _read_input(path: str) -> bytes:
    if path == '-':
        return sys.stdin.buffer.read()
    try:
        with open(path, 'rb') as f:
            return f.read()
    except OSError as e:
        raise ValidationError(f"Cannot read {path}: {e.strerror}") from e

def _read_expectations(path: str) -> Dict[str, Any]:
    try:
        with open(path, 'r') as f:
            data = json.load(f)
    except OSError as e:
        raise ValidationError(f"Cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise ValidationError(f"Invalid expectations file {path}: {e.msg}") from e
    if not isinstance(data, dict):
        raise ValidationError("Expectations file must contain a JSON object")
    return data

def _error_payload(error: DualCheegerException) -> Dict[str, Any]:
    payload: Dict[str, Any] = {'error': type(error).__name__, 'message': str(error)}
    syntax = error if isinstance(error, WeightSyntaxError) else error.__cause__
    if isinstance(syntax, WeightSyntaxError):
        payload['position'] = syntax.position
        payload['expected'] = list(syntax.expected)
    return payload

def _configure(args: argparse.Namespace) -> ConfigManager:
    config = ConfigManager({
        'backend': getattr(args, 'backend', None),
        'truncation_order': getattr(args, 'truncation_order', None),
        'max_bruteforce': getattr(args, 'max_bruteforce', None),
        'workers': getattr(args, 'workers', None),
        'format': getattr(args, 'format', None),
    }, log_level=resolve_level(args.log_level) if args.log_level else None)
    if args.log_level:
        logger.setLevel(config.log_level)
    return config

def run_generate(args: argparse.Namespace) -> int:
    graph = generate(args.family, n=args.n, k=args.k, backend=args.backend)
    sys.stdout.write(dump_graph(graph).decode('utf-8'))
    return EXIT_PASS

def run_analysis(args: argparse.Namespace, config: ConfigManager) -> int:
    """Shared body of ``analyze`` and ``certify``."""
    timings: Dict[str, float] = {}
    with stage_timer(timings, 'total'):
        with stage_timer(timings, 'parse'):
            graph = parse_graph(_read_input(args.input), backend=config.get('backend'),
                                truncation_order=config.get('truncation_order'))
        expectations = None
        if getattr(args, 'expect', None):
            expectations = _read_expectations(args.expect)
        with stage_timer(timings, 'analysis'):
            certificate = certify(graph, max_vertices=config.get('max_bruteforce'),
                                  workers=config.get('workers'), expectations=expectations)

    report = build_report(graph, certificate, timings)
    sys.stdout.write(RENDERERS[config.get('format')](report))
    outcome = certificate.overall_verdict
    logger.info(f"{args.command}: {outcome.value}")
    if args.command == 'analyze':
        return EXIT_PASS
    return _EXIT_CODES[outcome]

def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _configure(args)
        if args.command == 'generate':
            return run_generate(args)
        return run_analysis(args, config)
    except DualCheegerException as e:
        logger.error(f"{args.command} failed: {e}")
        sys.stderr.write(json.dumps(_error_payload(e)) + '\n')
        return EXIT_INPUT_ERROR

if __name__ == '__main__':
    sys.exit(main())
