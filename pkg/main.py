#!/usr/bin/env python3
"""
Pancake Graph Coloring Toolkit
Builds, colors, verifies and bounds Pancake graphs P_n from the command line.
Every subcommand produces a RunReport (JSON with --json, tables otherwise).

Exit codes: 0 success, 1 verification failure or error, 2 timeout, 64 usage.
"""

import argparse
import logging
import sys
import time
from collections import Counter
from typing import List, Optional, Sequence

import pandas as pd

from core.coloring import read_coloring_file, write_coloring_file
from core.config import PancakeSettings, load_settings, resolve_threads
from core.dimacs import read_dimacs, write_graph_dimacs, write_pancake_dimacs
from core.errors import (
    CapacityError,
    ColoringFormatError,
    ConfigurationError,
    DomainError,
    IdentityConflictError,
    MembershipError,
    PancakeError,
    RangeError,
    UsageError,
)
from core.pancake import PancakeView, copy_view
from core.permutations import format_permutation, parse_permutation
from core.report import RunReport, export_report
from core.verify import VerifyReport, verify_equitable, verify_perfect
from colorings.bounds import upper_bound_table
from colorings.domsets import DomSetId, dom_set, is_efficient_dominating, partition_check
from colorings.quotient import (
    build_quotient,
    greedy_quotient_coloring,
    quotient_coloring,
    quotient_conflicts,
    quotient_from_pancake,
    same_partition,
)
from colorings.registry import METHOD_RANGES, build_coloring
from solver.certify import MAX_CERTIFIED_N, certify_chromatic_number
from solver.exact import MODES, exact_chi, find_k_coloring
from solver.instance import SearchBudget, SolveStatus

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_TIMEOUT = 2
EXIT_USAGE = 64

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
USAGE_ERRORS = (UsageError, ConfigurationError, RangeError, CapacityError, DomainError, IdentityConflictError)


class UsageArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def add_global_options(parser: argparse.ArgumentParser, suppress: bool = False) -> None:
    """Options accepted before or after the subcommand; subcommand copies only override when given."""
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument('--json', action='store_true', default=default(False), help='print the RunReport as JSON')
    parser.add_argument('--threads', type=int, default=default(None),
                        help='worker processes (default: PANCAKE_THREADS or CPU count)')
    parser.add_argument('-v', '--verbose', action='count', default=default(0), help='-v for INFO, -vv for DEBUG')
    parser.add_argument('--report-file', default=default(None), help='also write the report here (PANCAKE_REPORT_FILE)')
    parser.add_argument('--env-file', default=default(None), help='dotenv file to load (default: ./.env)')


def build_parser() -> argparse.ArgumentParser:
    parser = UsageArgumentParser(
        prog='pancake-coloring',
        description='Colorings, bounds and chromatic numbers of Pancake graphs',
    )
    add_global_options(parser)

    common = argparse.ArgumentParser(add_help=False)
    add_global_options(common, suppress=True)

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument('--timeout', type=float, default=None, help='seconds (default: PANCAKE_TIMEOUT, 600)')
    budget.add_argument('--max-nodes', type=int, default=None, help='search nodes (default: PANCAKE_MAX_NODES)')
    budget.add_argument('--seed', type=int, default=None, help='heuristic seed (default: PANCAKE_SEED)')

    commands = parser.add_subparsers(dest='command', metavar='command', parser_class=UsageArgumentParser)
    commands.required = True

    bounds = commands.add_parser('bounds', parents=[common], help='upper/lower bounds on chi(P_n)')
    bounds.add_argument('n', type=int)

    color = commands.add_parser('color', parents=[common], help='build a coloring of P_n')
    color.add_argument('n', type=int)
    color.add_argument('--method', required=True, choices=sorted(METHOD_RANGES))
    color.add_argument('--blocks', default=None, help="block sizes for compose, e.g. '7,3'")
    color.add_argument('--verify', action='store_true', help='verify proper/equitable after building')
    color.add_argument('--perfect', action='store_true', help='also check perfectness')
    color.add_argument('--out', default=None, help='write the coloring file here')

    verify = commands.add_parser('verify', parents=[common], help='verify a coloring file on P_n')
    verify.add_argument('n', type=int)
    verify.add_argument('file')
    verify.add_argument('--perfect', action='store_true', help='also check perfectness')
    verify.add_argument('--vertex', action='append', default=None,
                        help="show the colors around a vertex, e.g. '[14352]' (repeatable)")

    domsets = commands.add_parser('domsets', parents=[common], help='efficient dominating sets D_i and D_i^j')
    domsets.add_argument('n', type=int)
    domsets.add_argument('--set', dest='dom_set', default=None,
                         help="'i' for D_i in P_n, 'i,j' for D_i^j in the copy P_{n-1}(j)")

    quotient = commands.add_parser('quotient', parents=[common], help='quotient graph Q_n and its (n-1)-coloring')
    quotient.add_argument('n', type=int)
    quotient.add_argument('--from-pancake', action='store_true', help='compare with the contraction of P_n (n <= 7)')
    quotient.add_argument('--greedy', action='store_true', help='compare with greedy coloring along the Hamiltonian order')
    quotient.add_argument('--dimacs', default=None, help='write Q_n in DIMACS format here (ids follow sorted (i, j))')

    chi = commands.add_parser('exact-chi', parents=[common, budget], help='chromatic number by complete search')
    chi.add_argument('n', type=int, nargs='?', default=None)
    chi.add_argument('--dimacs', default=None, help='solve a DIMACS graph instead of P_n')

    search = commands.add_parser('search', parents=[common, budget], help='search for a k-coloring of P_n')
    search.add_argument('n', type=int)
    search.add_argument('-k', type=int, required=True)
    search.add_argument('--mode', choices=MODES, default='auto')
    search.add_argument('--out', default=None, help='write the witness coloring file here')

    export = commands.add_parser('export-dimacs', parents=[common], help='write P_n in DIMACS format')
    export.add_argument('n', type=int)
    export.add_argument('--out', default=None, help='output file (default: standard output)')

    return parser


def setup_logging(settings: PancakeSettings, verbosity: int = 0) -> None:
    """StreamHandler on stderr (stdout carries reports) plus the optional log file."""
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.log_level, logging.WARNING)

    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if settings.log_file:
        handlers.append(logging.FileHandler(settings.log_file))
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)


class PancakeCLI:
    """Runs one subcommand and fills its RunReport."""

    def __init__(self, args: argparse.Namespace, settings: PancakeSettings, argv: Sequence[str]):
        self.args = args
        self.settings = settings
        self.threads = resolve_threads(args.threads, settings)
        inputs = {key: value for key, value in vars(args).items()}
        inputs.update({'argv': list(argv), 'threads': self.threads, 'n': getattr(args, 'n', None)})
        self.report = RunReport(command=args.command, inputs=inputs)
        self.lines: List[str] = []

    def budget(self) -> SearchBudget:
        args = self.args
        return SearchBudget.from_settings(self.settings, timeout=args.timeout,
                                          max_nodes=args.max_nodes, seed=args.seed)

    def run(self) -> int:
        logger.info("=" * 70)
        logger.info(f"pancake-coloring {self.args.command} (threads={self.threads})")
        logger.info("=" * 70)
        handler = getattr(self, 'cmd_' + self.args.command.replace('-', '_'))
        started = time.time()
        try:
            return handler()
        finally:
            self.report.add_timing('total', time.time() - started)

    def _timed(self, phase: str, func, *args, **kwargs):
        started = time.time()
        result = func(*args, **kwargs)
        self.report.add_timing(phase, time.time() - started)
        return result

    def _inspect_vertex(self, coloring, text: str) -> dict:
        perm = parse_permutation(text)
        view = PancakeView(self.args.n)
        try:
            edges = view.neighbors(perm)
        except MembershipError as e:
            raise UsageError(f"--vertex {text!r}: {e}")
        neighbors = {f"r_{edge.generator}": {'vertex': format_permutation(edge.v), 'color': coloring.color(edge.v)}
                     for edge in edges}
        color = coloring.color(perm)
        clashes = sorted(name for name, entry in neighbors.items() if entry['color'] == color)
        self.lines.append(f"{format_permutation(perm)} → {color}; neighbors "
                          + ", ".join(f"{name}:{entry['color']}" for name, entry in neighbors.items()))
        return {'vertex': format_permutation(perm), 'color': color, 'neighbors': neighbors, 'clashes': clashes}

    def _verify_lines(self, report: VerifyReport) -> None:
        sizes = pd.DataFrame({'color': range(1, len(report.class_sizes) + 1), 'size': report.class_sizes})
        self.lines.append(sizes.to_string(index=False))
        self.lines.append(f"vertices: {report.vertices}  edges: {report.edges}")
        self.lines.append(f"proper: {report.proper}  violations: {report.violations}")
        self.lines.append(f"equitable: {report.equitable}  strongly equitable: {report.strongly_equitable}")
        if report.perfect is not None:
            self.lines.append(f"perfect: {report.perfect}")
        for u, v in report.to_dict()['witnesses']:
            self.lines.append(f"  monochromatic edge {u} - {v}")

    # subcommands

    def cmd_bounds(self) -> int:
        bounds = upper_bound_table(self.args.n)
        self.report.results = bounds.to_dict()
        self.lines.append(bounds.to_frame().to_string())
        self.lines.append(f"best upper bound: {bounds.best}")
        self.lines.append(f"best lower bound: {bounds.lower}")
        return EXIT_OK

    def cmd_color(self) -> int:
        args = self.args
        coloring = build_coloring(args.method, args.n, args.blocks)
        results = {'method': args.method, 'coloring': coloring.name, 'k': coloring.k}
        self.report.results = results
        self.lines.append(f"{coloring.name}: {coloring.k} colors on P_{args.n}")

        if args.out:
            results['out'] = args.out
            results['lines'] = self._timed('write', write_coloring_file, coloring, args.out)
            self.lines.append(f"wrote {results['lines']} vertices to {args.out}")

        if args.verify or args.perfect:
            check = verify_perfect if args.perfect else verify_equitable
            report = self._timed('verify', check, PancakeView(args.n), coloring, workers=self.threads)
            results['verify'] = report.to_dict()
            self._verify_lines(report)
            if not report.proper:
                self.report.status = 'failed'
                return EXIT_FAILED
        return EXIT_OK

    def cmd_verify(self) -> int:
        args = self.args
        coloring = self._timed('read', read_coloring_file, args.file)
        if coloring.n != args.n:
            raise ColoringFormatError(f"{args.file} colors P_{coloring.n}, expected P_{args.n}")
        check = verify_perfect if args.perfect else verify_equitable
        report = self._timed('verify', check, PancakeView(args.n), coloring, workers=self.threads)
        self.report.results = {'verify': report.to_dict()}
        self._verify_lines(report)
        if args.vertex:
            self.report.results['vertices'] = [self._inspect_vertex(coloring, text) for text in args.vertex]
        if not report.proper:
            self.report.status = 'failed'
            return EXIT_FAILED
        return EXIT_OK

    def cmd_domsets(self) -> int:
        args = self.args
        n = args.n
        if args.dom_set:
            try:
                parts = [int(part) for part in args.dom_set.split(',')]
            except ValueError:
                raise UsageError(f"--set expects 'i' or 'i,j', got {args.dom_set!r}")
            if len(parts) not in (1, 2):
                raise UsageError(f"--set expects 'i' or 'i,j', got {args.dom_set!r}")
            dom_id = DomSetId(*parts)
            view = PancakeView(n) if dom_id.j is None else copy_view(n, dom_id.j)
            certificate = self._timed('check', is_efficient_dominating, view, dom_set(n, dom_id), workers=self.threads)
            self.report.results = {'sets': [{'set': dom_id.label(), 'view': view.describe(), **certificate.to_dict()}]}
            self.lines.append(f"{dom_id.label()} in {view.describe()}: efficient={certificate.efficient}")
            ok = certificate.efficient
        else:
            partition = self._timed('partition', partition_check, n, workers=self.threads)
            sets = []
            started = time.time()
            for i in range(1, n + 1):
                dom_id = DomSetId(i)
                certificate = is_efficient_dominating(PancakeView(n), dom_set(n, dom_id), workers=self.threads)
                sets.append({'set': dom_id.label(), 'view': f"P_{n}", **certificate.to_dict()})
            self.report.add_timing('dominating', time.time() - started)
            self.report.results = {'partition': partition.to_dict(), 'sets': sets}
            frame = pd.DataFrame([{'set': s['set'], 'size': s['set_size'], 'efficient': s['efficient']} for s in sets])
            self.lines.append(frame.to_string(index=False))
            self.lines.append(f"D_i^j partition: {partition.parts} parts of size {partition.part_size}, ok={partition.ok}")
            ok = partition.ok and all(s['efficient'] for s in sets)

        if not ok:
            self.report.status = 'failed'
            return EXIT_FAILED
        return EXIT_OK

    def cmd_quotient(self) -> int:
        args = self.args
        n = args.n
        quotient = self._timed('build', build_quotient, n)
        coloring = quotient_coloring(n)
        conflicts = quotient_conflicts(quotient, coloring)
        sizes = Counter(coloring.values())
        results = {
            'vertices': quotient.vertex_count,
            'edges': quotient.edge_count,
            'expected_edges': n * (n - 1) ** 2 // 2,
            'colors': len(sizes),
            'proper': not conflicts,
            'conflicts': [[list(a), list(b)] for a, b in conflicts[:10]],
            'class_sizes': [sizes[c] for c in sorted(sizes)],
        }
        ok = not conflicts
        if args.from_pancake:
            empirical = self._timed('contract', quotient_from_pancake, n, workers=self.threads)
            matches = {frozenset(e) for e in empirical.graph.edges()} == {frozenset(e) for e in quotient.graph.edges()}
            results['matches_pancake'] = matches
            ok = ok and matches
        if args.greedy:
            results['greedy_matches'] = same_partition(greedy_quotient_coloring(n), coloring)
        if args.dimacs:
            with open(args.dimacs, 'w') as f:
                write_graph_dimacs(quotient.graph, f, order=quotient.vertices)
            results['dimacs'] = args.dimacs
        results['coloring'] = {f"({i},{j})": coloring[(i, j)] for i, j in quotient.vertices}
        self.report.results = results

        self.lines.append(f"Q_{n}: {results['vertices']} vertices, {results['edges']} edges")
        self.lines.append(f"c: {results['colors']} colors, proper={results['proper']}, class sizes {results['class_sizes']}")
        for key in ('matches_pancake', 'greedy_matches'):
            if key in results:
                self.lines.append(f"{key.replace('_', ' ')}: {results[key]}")
        if args.dimacs:
            self.lines.append(f"DIMACS written to {args.dimacs} (vertex ids follow sorted (i, j))")
        self.lines.extend(f"{label} → {color}" for label, color in results['coloring'].items())
        if not ok:
            self.report.status = 'failed'
            return EXIT_FAILED
        return EXIT_OK

    def cmd_exact_chi(self) -> int:
        args = self.args
        budget = self.budget()
        if args.dimacs:
            graph = read_dimacs(args.dimacs)
            result = self._timed('solve', exact_chi, graph, budget)
            self.report.results = result.to_dict()
            status = result.status
            self.lines.append(f"{args.dimacs}: {result.lower} <= chi <= {result.upper} ({status})")
        elif args.n is None:
            raise UsageError("exact-chi needs n or --dimacs FILE")
        elif args.n < MAX_CERTIFIED_N:
            result = self._timed('solve', exact_chi, PancakeView(args.n), budget)
            self.report.results = result.to_dict()
            status = result.status
            self.lines.append(f"chi(P_{args.n}): {result.lower} <= chi <= {result.upper} ({status})")
            for step in result.steps:
                self.lines.append(f"  k={step['k']}: {step['status']} ({step['nodes']} nodes)")
        else:
            certificate = self._timed('certify', certify_chromatic_number, args.n, budget, workers=self.threads)
            self.report.results = certificate.to_dict()
            status = certificate.status
            self.lines.append(f"chi(P_{args.n}) >= {certificate.lower}: {certificate.lower_source}")
            self.lines.append(f"chi(P_{args.n}) <= {certificate.upper}: {certificate.upper_source}")
            self.lines.append(f"certified: {certificate.certified}")

        if status == 'timeout':
            self.report.status = 'timeout'
            return EXIT_TIMEOUT
        return EXIT_OK

    def cmd_search(self) -> int:
        args = self.args
        outcome = self._timed('search', find_k_coloring, PancakeView(args.n), args.k, self.budget(),
                              mode=args.mode, workers=self.threads)
        results = outcome.to_dict()
        self.lines.append(f"{args.k}-coloring of P_{args.n}: {outcome.status.value} "
                          f"({outcome.nodes} nodes, {outcome.elapsed:.2f}s)")
        if outcome.status is SolveStatus.COLORED and args.out:
            results['out'] = args.out
            results['lines'] = self._timed('write', write_coloring_file, outcome.coloring, args.out)
            self.lines.append(f"wrote witness to {args.out}")
        self.report.results = results
        if outcome.status is SolveStatus.TIMEOUT:
            self.report.status = 'timeout'
            return EXIT_TIMEOUT
        return EXIT_OK

    def cmd_export_dimacs(self) -> int:
        args = self.args
        if args.out is None and args.json:
            raise UsageError("export-dimacs to standard output cannot be combined with --json; use --out")
        target = args.out if args.out else sys.stdout
        edges = self._timed('export', write_pancake_dimacs, PancakeView(args.n), target)
        self.report.results = {'edges': edges, 'out': args.out}
        if args.out:
            self.lines.append(f"wrote P_{args.n} ({edges} edges) to {args.out}")
        return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point; returns the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        settings = load_settings(args.env_file)
    except (UsageError, ConfigurationError) as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE

    setup_logging(settings, args.verbose)
    cli = None
    code = EXIT_FAILED
    error = None
    try:
        cli = PancakeCLI(args, settings, argv)
        code = cli.run()
    except USAGE_ERRORS as e:
        error = str(e)
        logger.error(str(e))
        print(f"pancake-coloring: {e}", file=sys.stderr)
        code = EXIT_USAGE
    except PancakeError as e:
        error = str(e)
        logger.error(f"{type(e).__name__}: {e}")
        code = EXIT_FAILED
    except KeyboardInterrupt:
        error = "interrupted"
        logger.info("Interrupted by user")
        code = EXIT_FAILED
    except Exception as e:
        error = str(e)
        logger.error(f"Fatal error: {e}", exc_info=True)
        code = EXIT_FAILED

    if cli is None:
        return code
    if code != EXIT_OK and cli.report.status == 'ok':
        cli.report.status = 'error'
        cli.report.results.setdefault('error', error or f"exit code {code}")

    if args.json:
        print(cli.report.to_json())
    elif cli.lines:
        print("\n".join(cli.lines))
    export_report(cli.report, args.report_file or settings.report_file)
    return code


if __name__ == "__main__":
    sys.exit(main())
