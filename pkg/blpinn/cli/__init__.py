"""
Experiment driver: configs, cells, executor and the blpinn command
"""
from .cells import CellStatus, ExperimentCell
from .config import (
    ExperimentConfig,
    LoggingConfig,
    ProblemConfig,
    load_config,
    parse_config,
    seed_offset,
    setup_logging,
)
from .executor import CellExecutor
from .runner import CellOutcome, run_cell

__all__ = [
    "CellStatus",
    "ExperimentCell",
    "ExperimentConfig",
    "LoggingConfig",
    "ProblemConfig",
    "load_config",
    "parse_config",
    "seed_offset",
    "setup_logging",
    "CellExecutor",
    "CellOutcome",
    "run_cell",
]
