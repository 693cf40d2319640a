import argparse
import logging
import os
import sys
from typing import Literal, Optional

from pydantic import BaseModel, PositiveInt, ValidationError, model_validator
from rich.logging import RichHandler
from rich.table import Table

from characterize import comb_analysis, generalized_star_table, star_prism_check
from constants import (
    DEFAULT_JOBS,
    DEFAULT_MAX_ORDER_FORCE_ENUM,
    DEFAULT_MAX_ORDER_Z,
    ENV_PREFIX,
    EXIT_BUDGET,
    EXIT_IO,
    EXIT_OK,
    EXIT_VIOLATION,
    SUITE_NAMES,
)
from errors import BudgetExceededError, Graph6ParseError, GraphArgumentError, TheoremViolation, ZeroForcingError
from families import family
from graphs import Graph, encode_graph6, parse_graph6
from nullity import certify_family
from reports import FamilyRow, FamilyTable, emit, to_csv, to_json
from search import SearchBudget, analyze
from suites import run_suites, write_exceptions
from utils import console, load_corpus, run_batch

logger = logging.getLogger(__name__)

Command = Literal["analyze", "family", "corpus-verify", "witness"]


def _env(flag: str, default=None):
    """Environment override for a flag: --budget-z reads ZF_BUDGET_Z."""
    return os.environ.get(ENV_PREFIX + flag.upper().replace("-", "_"), default)


class RunConfig(BaseModel):
    command: Command
    g6: Optional[str] = None
    g6_file: Optional[str] = None
    family: Optional[list[str]] = None
    suites: list[str] = list(SUITE_NAMES)
    budget_z: PositiveInt = DEFAULT_MAX_ORDER_Z
    budget_forces: PositiveInt = DEFAULT_MAX_ORDER_FORCE_ENUM
    jobs: PositiveInt = DEFAULT_JOBS
    steps: PositiveInt = 1
    out: Optional[str] = None
    format: Literal["json", "csv"] = "json"
    exceptions_dir: str = "."
    quiet: bool = False
    verbose: bool = False

    @model_validator(mode="after")
    def check_input(self):
        sources = [s for s in (self.g6, self.g6_file, self.family) if s]
        if len(sources) != 1:
            raise ValueError("give exactly one of --g6, --g6-file, --family")
        if self.command == "family" and not self.family:
            raise ValueError("family needs --family NAME ARGS")
        if self.command == "witness" and not self.family:
            raise ValueError("witness needs --family Kn N or --family P2")
        unknown = [s for s in self.suites if s not in SUITE_NAMES and s != "all"]
        if unknown:
            raise ValueError(f"unknown suite(s) {', '.join(unknown)}")
        return self

    @property
    def budget(self) -> SearchBudget:
        return SearchBudget(max_order=self.budget_z, max_force_order=self.budget_forces)

    def family_spec(self) -> tuple[str, list[int]]:
        name, *params = self.family
        try:
            return name, [int(p) for p in params]
        except ValueError:
            raise GraphArgumentError(f"family parameters must be integers, got {params}") from None


def _add_common_arguments(p: argparse.ArgumentParser) -> None:
    source = p.add_argument_group("input (exactly one)")
    source.add_argument("--g6", type=str, default=_env("g6"), help="Inline graph6 record")
    source.add_argument("--g6-file", type=str, default=_env("g6-file"),
                        help="graph6 file, or a bundled corpus: atlas:N, connected:N, trees:N")
    source.add_argument("--family", nargs="+", metavar="NAME_OR_ARG",
                        default=_env("family", "").split() or None,
                        help="Named family and its integer parameters, e.g. --family genstar 2 5 11")
    p.add_argument("--budget-z", type=int, default=_env("budget-z", DEFAULT_MAX_ORDER_Z),
                   help=f"Largest order for exact zero forcing search (default: {DEFAULT_MAX_ORDER_Z})")
    p.add_argument("--budget-forces", type=int,
                   default=_env("budget-forces", DEFAULT_MAX_ORDER_FORCE_ENUM),
                   help=f"Largest order for force-set enumeration (default: {DEFAULT_MAX_ORDER_FORCE_ENUM})")
    p.add_argument("--jobs", "-j", type=int, default=_env("jobs", DEFAULT_JOBS),
                   help=f"Worker processes (default: {DEFAULT_JOBS})")
    p.add_argument("--out", "-o", type=str, default=_env("out"),
                   help="Output file (default: print to stdout)")
    p.add_argument("--format", choices=["json", "csv"], default=_env("format", "json"),
                   help="Output format (default: json)")
    p.add_argument("--quiet", "-q", action="store_true", help="Suppress progress output")
    p.add_argument("--verbose", "-v", action="store_true", help="Debug logging")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zf-proptime",
        description="Zero forcing propagation time: exact analysis and theorem verification"
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    analyze_parser = subparsers.add_parser(
        "analyze",
        help="Z, pt, PT, pd and the efficient zero forcing sets of a graph"
    )
    _add_common_arguments(analyze_parser)

    family_parser = subparsers.add_parser(
        "family",
        help="Report for a named family, with closed forms where known"
    )
    _add_common_arguments(family_parser)

    verify_parser = subparsers.add_parser(
        "corpus-verify",
        help="Run theorem suites over a graph6 corpus"
    )
    _add_common_arguments(verify_parser)
    verify_parser.add_argument(
        "--suites",
        type=str,
        default=_env("suites", "all"),
        help=f"Comma-separated suites (default: all): {', '.join(SUITE_NAMES)}"
    )
    verify_parser.add_argument(
        "--exceptions-dir",
        type=str,
        default=_env("exceptions-dir", "."),
        help="Directory for the exceptional zigzag graph files (default: .)"
    )

    witness_parser = subparsers.add_parser(
        "witness",
        help="Certify maximum nullity witnesses for K_n or P_2 under repeated products with P_2"
    )
    _add_common_arguments(witness_parser)
    witness_parser.add_argument(
        "--steps", "-s",
        type=int,
        default=_env("steps", 1),
        help="Number of products with P_2 (default: 1)"
    )
    return parser


def _configure_logging(config: RunConfig) -> None:
    level = logging.DEBUG if config.verbose else logging.WARNING if config.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(message)s", datefmt="[%X]",
                        handlers=[RichHandler(console=console, show_path=False)], force=True)


def _resolve_graphs(config: RunConfig) -> list[Graph]:
    if config.g6:
        return [parse_graph6(config.g6)]
    if config.g6_file:
        return load_corpus(config.g6_file)
    name, params = config.family_spec()
    return [family(name, *params)]


def _analyze_one(job: tuple[str, SearchBudget]):
    g6, budget = job
    try:
        return analyze(parse_graph6(g6), budget)
    except BudgetExceededError as e:
        logger.warning("skipping %s: %s", g6, e)
        return None


def cmd_analyze(config: RunConfig) -> int:
    graphs = _resolve_graphs(config)
    if len(graphs) == 1:
        reports = [analyze(graphs[0], config.budget, jobs=config.jobs)]
    else:
        jobs = [(encode_graph6(g), config.budget) for g in graphs]
        reports = [r for r in run_batch(jobs, _analyze_one, jobs=config.jobs, quiet=config.quiet,
                                        get_item_name=lambda job: job[0], description="Analyzing") if r]
    if config.format == "csv":
        emit(to_csv(reports), config.out)
    else:
        emit(to_json(reports[0] if len(graphs) == 1 else reports), config.out)
    return EXIT_OK


def _family_table(config: RunConfig) -> FamilyTable:
    name, params = config.family_spec()
    budget = config.budget
    if name == "genstar":
        return generalized_star_table(*params, budget=budget)

    g = family(name, *params)
    report = analyze(g, budget, jobs=config.jobs)
    rows = [FamilyRow(zero_forcing_set=[g.label(v) for v in b], pt=t)
            for b, t in zip(report.min_zfs, report.times)]
    facts = {}
    if name == "comb":
        comb = comb_analysis(params[0], budget)
        facts = {"diameter": comb.diameter, "prescribed": list(comb.prescribed),
                 "prescribed_pt": comb.prescribed_pt, "leaf_bound": comb.leaf_bound}
    elif name == "star-prism":
        prism = star_prism_check(params[0], budget)
        facts = {"Z": prism.Z, "pt": prism.pt, "PT": prism.PT}
    return FamilyTable(family=name, params=params, analysis=report, rows=rows, facts=facts)


def cmd_family(config: RunConfig) -> int:
    table = _family_table(config)

    if not config.quiet:
        view = Table(title=f"{table.family} {' '.join(map(str, table.params))}".strip())
        view.add_column("zero forcing set")
        view.add_column("pt", justify="right")
        view.add_column("closed form", justify="right")
        for row in table.rows:
            view.add_row(", ".join(row.zero_forcing_set), str(row.pt),
                         "" if row.predicted is None else str(row.predicted))
        console.print(view)

    if config.format == "csv":
        emit(to_csv([table.analysis]), config.out)
    else:
        emit(to_json(table), config.out)
    return EXIT_OK


def cmd_corpus_verify(config: RunConfig) -> int:
    graphs = _resolve_graphs(config)
    corpus = config.g6_file or config.g6 or " ".join(config.family)
    summary = run_suites(graphs, config.suites, config.budget, corpus=corpus,
                         jobs=config.jobs, quiet=config.quiet)
    if "zigzag" in [s.suite for s in summary.suites]:
        write_exceptions(summary, config.exceptions_dir)

    if config.format == "csv":
        jobs = [(encode_graph6(g), config.budget) for g in graphs]
        reports = [r for r in run_batch(jobs, _analyze_one, jobs=config.jobs, quiet=True) if r]
        emit(to_csv(reports), config.out)
    else:
        emit(to_json(summary), config.out)

    for suite in summary.suites:
        logger.info("%s: %d checked, %d passed, %d violations, %d skipped",
                    suite.suite, suite.checked, suite.passed, suite.violations, suite.skipped)
        for failure in suite.failures:
            console.print(f"[red]{suite.suite}: {failure['claim']} violated on {failure['graph6']}[/red]")
            console.print_json(data=failure)
    return EXIT_VIOLATION if summary.violations else EXIT_OK


def cmd_witness(config: RunConfig) -> int:
    name, params = config.family_spec()
    n = params[0] if params else 2
    certificate = certify_family(name, n, config.steps, config.budget)
    emit(to_json(certificate), config.out)
    if not config.quiet:
        console.print(f"{certificate.family} after {certificate.steps} step(s): order {certificate.order}, "
                      f"M >= {certificate.M_lower}, Z = {certificate.Z if certificate.Z is not None else '?'}")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "family": cmd_family,
    "corpus-verify": cmd_corpus_verify,
    "witness": cmd_witness,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_OK

    try:
        config = RunConfig(
            command=args.command,
            g6=args.g6,
            g6_file=args.g6_file,
            family=args.family,
            suites=[s.strip() for s in getattr(args, "suites", "all").split(",") if s.strip()],
            budget_z=args.budget_z,
            budget_forces=args.budget_forces,
            jobs=args.jobs,
            steps=getattr(args, "steps", 1),
            out=args.out,
            format=args.format,
            exceptions_dir=getattr(args, "exceptions_dir", "."),
            quiet=args.quiet,
            verbose=args.verbose,
        )
    except ValidationError as e:
        console.print(f"[red]Error: invalid configuration: {e}[/red]")
        return EXIT_BUDGET

    _configure_logging(config)
    try:
        return COMMANDS[config.command](config)
    except TheoremViolation as e:
        console.print(f"[red]Theorem violation: {e}[/red]")
        return EXIT_VIOLATION
    except Graph6ParseError as e:
        console.print(f"[red]Error: could not parse graph6: {e}[/red]")
        return EXIT_IO
    except OSError as e:
        console.print(f"[red]Error: {e}[/red]")
        return EXIT_IO
    except ZeroForcingError as e:
        console.print(f"[red]Error: {e}[/red]")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
