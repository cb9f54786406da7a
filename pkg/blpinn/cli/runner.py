"""
Running one experiment cell: train, build the reference, score
"""
import logging
import time
from functools import lru_cache
from typing import Any, Callable, Dict, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict

from ..exceptions import DegenerateCorrector
from ..network import NetParams
from ..problems import ProblemKind, ProblemSpec, create_forcing, get_problem
from ..reference import (
    SOLUTION_POINTS,
    ReferenceSolution,
    exact_solution,
    layer_layout,
    oracle_solve,
    problem_grid,
    rel_l2_error,
)
from ..reference.metrics import DEFAULT_QUAD_POINTS
from ..training import train
from .cells import ExperimentCell


logger = logging.getLogger(__name__)


class CellOutcome(BaseModel):
    """Report row and solution curve of a finished cell"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    row: Dict[str, Any]
    solution: pd.DataFrame


@lru_cache(maxsize=16)
def _oracle_reference(kind: ProblemKind, eps: float, forcing: str, mesh: int) -> ReferenceSolution:
    spec = ProblemSpec(kind=kind, eps=eps, forcing=create_forcing(forcing))
    return oracle_solve(spec, mesh)


def reference_function(cell: ExperimentCell, spec: ProblemSpec) -> Callable[[np.ndarray], np.ndarray]:
    """Closed-form solution when known, otherwise the oracle interpolant"""
    exact = exact_solution(spec)
    if exact is not None:
        return exact
    return _oracle_reference(cell.kind, cell.eps, cell.forcing, cell.reference_mesh)


def evaluate(spec: ProblemSpec, params: NetParams, truth: Callable) -> Tuple[float, pd.DataFrame]:
    """Relative L² error and the solution curve on graded points"""
    problem = get_problem(spec)

    def predicted(x):
        return problem.ansatz(params, x).u

    scale, walls = layer_layout(problem)
    error = rel_l2_error(predicted, truth, DEFAULT_QUAD_POINTS, scale, walls)

    x = problem_grid(problem, SOLUTION_POINTS)
    u_pred = predicted(x)
    u_ref = np.asarray(truth(x), dtype=float)
    solution = pd.DataFrame({
        "x": x,
        "u_pred": u_pred,
        "u_ref": u_ref,
        "abs_err": np.abs(u_pred - u_ref),
    })
    return error, solution


def run_cell(cell: ExperimentCell) -> CellOutcome:
    """
    Train and score one cell

    A Burgers cell whose limit has no layer at x = 0 (u⁰(0) = -1) falls back
    to the plain ansatz.

    Raises:
        NonFiniteLoss: From training
        NewtonDivergence: From the oracle reference
    """
    logger.info("Cell %s started", cell.cell_id)
    started = time.perf_counter()
    spec = cell.spec()
    try:
        params, report = train(spec, cell.train)
    except DegenerateCorrector as e:
        logger.warning("Cell %s: %s; training the plain ansatz instead", cell.cell_id, e)
        spec = cell.model_copy(update={"enriched": False}).spec()
        params, report = train(spec, cell.train)
    error, solution = evaluate(spec, params, reference_function(cell, spec))
    wall_seconds = time.perf_counter() - started

    row = {
        "problem": cell.label,
        "eps": cell.eps,
        "N": cell.train.n_points,
        "width": cell.train.width,
        "seed": cell.train.seed,
        "rel_l2": error,
        "final_loss": report.final_loss,
        "iterations": report.iterations_run,
        "wall_seconds": wall_seconds,
        "kind": cell.kind.value,
        "forcing": cell.forcing,
        "enriched": bool(spec.enriched),
        "sampling": cell.train.sampling.value,
        "lr": cell.train.lr,
        "max_iters": cell.train.max_iters,
        "stopped_early": report.stopped_early,
    }
    logger.info("Cell %s finished: rel_l2 %.4e in %.1fs", cell.cell_id, error, wall_seconds)
    return CellOutcome(row=row, solution=solution)
