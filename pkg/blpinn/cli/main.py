"""
blpinn command line

    blpinn train <config>
    blpinn sweep <config>
    blpinn table [--jobs K] [--out DIR] [--config FILE]
    blpinn reference <problem> <eps> [--mesh M] [--forcing SEL] [--out DIR]
"""
import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

from ..exceptions import (
    BLPinnError,
    ConfigError,
    DataConditionViolation,
    DegenerateCorrector,
    NewtonDivergence,
    NonFiniteLoss,
)
from ..problems import ProblemKind, ProblemSpec, create_forcing
from ..records import FileRunStore
from ..reference import DEFAULT_MESH, ReferenceSolution, exact_solution, oracle_solve, shishkin_mesh
from .cells import ExperimentCell
from .config import ExperimentConfig, LoggingConfig, ProblemConfig, load_config, setup_logging
from .executor import CellExecutor
from .output import (
    TABLE_COLUMNS,
    TABLE_SIZES,
    report_frame,
    sweep_frame,
    table_frame,
    write_frame,
)


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_CONFIG = 2
EXIT_NEWTON = 3
EXIT_NONFINITE = 4
EXIT_DATA = 5


def _check_spec(config: ExperimentConfig, eps: Optional[float] = None) -> ProblemSpec:
    try:
        return config.spec(eps)
    except (DataConditionViolation, DegenerateCorrector):
        raise
    except ValueError as e:
        raise ConfigError(f"invalid problem: {e}") from e


def _cells(config: ExperimentConfig, label: str, eps: float) -> List[ExperimentCell]:
    return [
        ExperimentCell(
            label=label,
            kind=config.problem.kind,
            eps=eps,
            forcing=config.problem.forcing,
            enriched=config.enrichment,
            train=config.train.model_copy(update={"seed": seed}),
            reference_mesh=config.reference_mesh,
        )
        for seed in config.seeds()
    ]


def _run_cells(cells: List[ExperimentCell], jobs: int, out_dir: Path) -> Dict:
    async def run():
        store = FileRunStore({"base_path": str(out_dir)})
        await store.initialize()
        return await CellExecutor(jobs, store).execute_all(cells)

    return asyncio.run(run())


def _raise_first_error(summary: Dict) -> None:
    if summary["errors"]:
        raise summary["errors"][0]["error"]


def _outcomes(summary: Dict) -> List:
    return [outcome for outcome in summary["outcomes"] if outcome is not None]


def cmd_train(args: argparse.Namespace) -> int:
    """Best-of-seeds training run: solution.csv and report.csv"""
    config = load_config(args.config)
    setup_logging(config.logging, args.verbose)
    spec = _check_spec(config)
    out_dir = Path(config.output_dir)

    cells = _cells(config, config.problem.kind.value, spec.eps)
    summary = _run_cells(cells, args.jobs, out_dir)
    outcomes = _outcomes(summary)
    rows = [outcome.row for outcome in outcomes]
    write_frame(report_frame(rows), out_dir / "report.csv")
    if outcomes:
        best = min(outcomes, key=lambda outcome: outcome.row["rel_l2"])
        write_frame(best.solution, out_dir / "solution.csv")
    _raise_first_error(summary)
    logger.info("Wrote results to %s", out_dir)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """One best-of-seeds run per ε: solution curves and sweep.csv"""
    config = load_config(args.config)
    setup_logging(config.logging, args.verbose)
    if not config.eps_list:
        raise ConfigError("eps_list must not be empty for a sweep")
    for eps in config.eps_list:
        _check_spec(config, eps)
    out_dir = Path(config.output_dir)

    cells = []
    for eps in config.eps_list:
        cells.extend(_cells(config, config.problem.kind.value, eps))
    summary = _run_cells(cells, args.jobs, out_dir)
    outcomes = _outcomes(summary)
    rows = [outcome.row for outcome in outcomes]

    write_frame(report_frame(rows), out_dir / "report.csv")
    write_frame(sweep_frame(rows), out_dir / "sweep.csv")
    for eps in config.eps_list:
        candidates = [o for o in outcomes if o.row["eps"] == eps]
        if candidates:
            best = min(candidates, key=lambda outcome: outcome.row["rel_l2"])
            write_frame(best.solution, out_dir / f"solution_eps{eps:g}.csv")
    _raise_first_error(summary)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    """Accuracy table over the five problem columns and N"""
    if args.config:
        config = load_config(args.config)
    else:
        config = ExperimentConfig(problem=ProblemConfig(kind=ProblemKind.SINGULAR_CD, eps=1e-4))
    setup_logging(config.logging, args.verbose)
    out_dir = Path(args.out or config.output_dir)
    sizes = args.sizes or list(TABLE_SIZES)

    cells = []
    for label, (kind, eps, forcing, enriched) in TABLE_COLUMNS.items():
        column = config.model_copy(update={
            "problem": ProblemConfig(kind=kind, eps=eps, forcing=forcing),
            "enrichment": enriched,
        })
        for n in sizes:
            sized = column.model_copy(update={"train": column.train.model_copy(update={"n_points": n})})
            cells.extend(_cells(sized, label, eps))

    summary = _run_cells(cells, args.jobs, out_dir)
    rows = [outcome.row for outcome in _outcomes(summary)]
    write_frame(report_frame(rows), out_dir / "report.csv")
    table = table_frame(rows, sizes)
    write_frame(table, out_dir / "table.csv")
    _raise_first_error(summary)
    logger.info("Table rows passing: %d of %d", int(table["pass"].sum()), len(table))
    return EXIT_OK


def cmd_reference(args: argparse.Namespace) -> int:
    """Dump the reference curve of one problem"""
    setup_logging(LoggingConfig(), args.verbose)
    try:
        kind = ProblemKind(args.problem)
        spec = ProblemSpec(kind=kind, eps=args.eps, forcing=create_forcing(args.forcing))
    except (DataConditionViolation, DegenerateCorrector):
        raise
    except ValueError as e:
        raise ConfigError(f"invalid problem: {e}") from e

    if kind == ProblemKind.HYPERBOLIC:
        reference = ReferenceSolution.from_function(exact_solution(spec), shishkin_mesh(args.mesh, None))
    else:
        reference = oracle_solve(spec, args.mesh)
    path = reference.to_csv(Path(args.out) / f"reference_{kind.value}_eps{args.eps:g}.csv")
    logger.info("Wrote %s", path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blpinn",
        description="Corrector-enriched two-layer PINNs for singularly perturbed problems.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    train = subparsers.add_parser("train", help="Train one configuration (best of n_seeds).")
    train.add_argument("config", help="Path to YAML experiment config.")
    train.add_argument("--jobs", type=int, default=1, help="Cells run concurrently.")
    train.set_defaults(handler=cmd_train)

    sweep = subparsers.add_parser("sweep", help="Train over the config's eps_list.")
    sweep.add_argument("config", help="Path to YAML experiment config.")
    sweep.add_argument("--jobs", type=int, default=1, help="Cells run concurrently.")
    sweep.set_defaults(handler=cmd_sweep)

    table = subparsers.add_parser("table", help="Reproduce the accuracy table.")
    table.add_argument("--jobs", type=int, default=1, help="Cells run concurrently.")
    table.add_argument("--out", default=None, help="Output directory.")
    table.add_argument("--config", default=None, help="Config supplying train/n_seeds/logging.")
    table.add_argument("--sizes", type=int, nargs="+", default=None, help="Collocation sizes N.")
    table.set_defaults(handler=cmd_table)

    reference = subparsers.add_parser("reference", help="Dump a reference solution curve.")
    reference.add_argument("problem", choices=[kind.value for kind in ProblemKind])
    reference.add_argument("eps", type=float)
    reference.add_argument("--mesh", type=int, default=DEFAULT_MESH, help="Mesh intervals.")
    reference.add_argument("--forcing", default="const:1", help="Forcing selector.")
    reference.add_argument("--out", default=".", help="Output directory.")
    reference.set_defaults(handler=cmd_reference)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code"""
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        logger.error("--jobs must be positive")
        return EXIT_CONFIG
    try:
        return args.handler(args)
    except ConfigError as e:
        logger.error("Configuration error: %s", e)
        return EXIT_CONFIG
    except NewtonDivergence as e:
        logger.error("Reference solver failed: %s", e)
        return EXIT_NEWTON
    except NonFiniteLoss as e:
        logger.error("Training diverged: %s", e)
        return EXIT_NONFINITE
    except (DataConditionViolation, DegenerateCorrector) as e:
        logger.error("Problem data rejected: %s", e)
        return EXIT_DATA
    except BLPinnError as e:
        logger.error("%s", e)
        return EXIT_UNEXPECTED
    except Exception as e:
        logger.exception("Unexpected error: %s", e)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
