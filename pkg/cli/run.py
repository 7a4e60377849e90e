"""Batch interface: ``python -m cli.run {table,verify,fit,series} [options]``.

Exit codes: 0 on success, 1 when a check or a computation fails, 2 on a bad run
configuration.
"""
import argparse
import logging
import os
import sys
from typing import List, Optional

from config import config
from models.partition import CTable, Route
from models.reports import Suite
from models.run import Command, OutputFormat, RunConfig, SeriesKind
from services.modularity import ModularityService
from services.partition import PartitionService
from services.ucombinatorics import UCombinatoricsService
from services.verification import VerificationService
from utils.errors import (
    FitWindowError,
    InvalidRunConfigError,
    NoSolutionError,
    ValidationFailureError,
)
from utils.output import render_json, render_table_csv, table_document

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3pairs",
        description="Exact stable-pair partition functions of K3 surfaces.",
    )
    parser.add_argument("command", choices=[command.value for command in Command])
    parser.add_argument("--n", type=int, default=1, help="rank of the section space")
    parser.add_argument("--r", type=int, default=0, help="rank of the sheaf")
    parser.add_argument("--gmax", type=int, default=4)
    parser.add_argument("--kmin", type=int, default=0)
    parser.add_argument("--kmax", type=int, default=4)
    parser.add_argument("--qorder", type=int, default=config.QORDER)
    parser.add_argument("--ywin", type=int, default=config.YWIN)
    parser.add_argument("--vorder", type=int, default=config.VORDER)
    parser.add_argument("--vmax", type=int, default=4, help="largest v-power to fit")
    parser.add_argument("--weight", type=int, default=None, dest="weight_bound")
    parser.add_argument("--weight-ceiling", type=int, default=config.WEIGHT_CEILING)
    parser.add_argument("--cutoff", type=int, default=config.CUTOFF)
    parser.add_argument("--rank-max", type=int, default=config.MATRIX_RANK_MAX)
    parser.add_argument("--suite", default=Suite.ALL.value)
    parser.add_argument("--route", default=Route.CLOSED.value)
    parser.add_argument(
        "--kind",
        default=SeriesKind.G.value,
        help="series to write: g (by --route), f, euler or c-table",
    )
    values = parser.add_mutually_exclusive_group()
    values.add_argument("--euler", dest="hodge", action="store_false")
    values.add_argument("--hodge", dest="hodge", action="store_true")
    parser.set_defaults(hodge=False)
    parser.add_argument(
        "--format",
        default=OutputFormat.CSV.value,
        choices=[output.value for output in OutputFormat],
    )
    parser.add_argument("--out", dest="output", default=None, help="output file")
    parser.add_argument(
        "--golden",
        nargs="?",
        const="",
        default=None,
        help="golden fit file; defaults to a file under GOLDEN_DIR",
    )
    return parser


def _emit(text: str, output: Optional[str]):
    if output is None:
        sys.stdout.write(text)
        return
    with open(output, "w", encoding="utf-8") as handle:
        handle.write(text)


def cmd_table(run: RunConfig) -> int:
    cells = PartitionService.table_cells(
        run.n, run.r, run.gmax, run.kmin, run.kmax, hodge=run.hodge
    )
    if run.format == OutputFormat.JSON:
        _emit(render_json(table_document(cells)), run.output)
    else:
        _emit(render_table_csv(cells), run.output)
    return EXIT_OK


def cmd_verify(run: RunConfig) -> int:
    report = VerificationService.run_suite(
        run.suite,
        run.qorder,
        run.ywin,
        run.vorder,
        run.cutoff,
        run.rank_max,
        nmax=run.n,
    )
    if run.output is not None or run.format == OutputFormat.JSON:
        _emit(render_json(report.dict()), run.output)
    failure = report.first_failure
    if failure is not None:
        location = ", ".join(
            f"{key}={value}" for key, value in failure.location.items()
        )
        sys.stderr.write(
            f"FAIL {failure.identity} at {location or '-'}: {failure.detail}\n"
        )
        return EXIT_FAILURE
    sys.stderr.write(f"{report.suite}: {len(report.verdicts)} identities hold\n")
    return EXIT_OK


def _golden_path(run: RunConfig) -> Optional[str]:
    if run.golden is None:
        return None
    if run.golden:
        return run.golden
    return os.path.join(config.GOLDEN_DIR, f"fit_n{run.n}_r{run.r}.json")


def cmd_fit(run: RunConfig) -> int:
    reports = []
    for s in range(0, run.vmax + 1):
        try:
            report = ModularityService.fit_coefficient(
                run.n,
                run.r,
                s,
                weight_bound=run.weight_bound,
                ceiling=run.weight_ceiling,
            )
        except (NoSolutionError, ValidationFailureError, FitWindowError) as exc:
            sys.stderr.write(f"FAIL fit n={run.n} r={run.r} s={s}: {exc}\n")
            return EXIT_FAILURE
        reports.append(report.dict())
    text = render_json({"n": run.n, "r": run.r, "fits": reports})
    path = _golden_path(run)
    if path is not None:
        if os.path.exists(path):
            with open(path, encoding="utf-8") as handle:
                if handle.read() != text:
                    sys.stderr.write(f"FAIL fit differs from golden file {path}\n")
                    return EXIT_FAILURE
            logging.info("fit matches golden file %s", path)
        else:
            directory = os.path.dirname(path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(text)
            logging.info("golden file %s created", path)
    _emit(text, run.output)
    return EXIT_OK


def cmd_series(run: RunConfig) -> int:
    if run.kind == SeriesKind.C_TABLE:
        table = CTable(
            n=run.n, r=run.r, entries=UCombinatoricsService.c_table(run.n, run.r)
        )
        _emit(render_json(table.to_dict()), run.output)
        return EXIT_OK
    route = {SeriesKind.F: Route.F, SeriesKind.EULER: Route.EULER}.get(
        run.kind, run.route
    )
    result = PartitionService.series(route, run.n, run.r, run.qorder, run.ywin)
    _emit(render_json(result.to_dict()), run.output)
    return EXIT_OK


COMMANDS = {
    Command.TABLE: cmd_table,
    Command.VERIFY: cmd_verify,
    Command.FIT: cmd_fit,
    Command.SERIES: cmd_series,
}


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=config.LOG_LEVEL, format="%(levelname)s %(name)s: %(message)s"
    )
    arguments = build_parser().parse_args(argv)
    try:
        run = RunConfig.build(**vars(arguments))
        return COMMANDS[run.command](run)
    except InvalidRunConfigError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        sys.stderr.write(f"FAIL {exc.__class__.__name__}: {exc}\n")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
