"""
Adam training loop with early stopping
"""
import logging
import time
from typing import Tuple

import numpy as np

from ..exceptions import NonFiniteLoss
from ..network import NetParams, init_params
from ..problems import ProblemSpec, get_problem
from .collocation import make_collocation
from .config import CHECKPOINT_EVERY, TrainConfig, TrainReport
from .loss import CollocationLoss
from .optimizer import Adam


logger = logging.getLogger(__name__)


def train(spec: ProblemSpec, cfg: TrainConfig) -> Tuple[NetParams, TrainReport]:
    """
    Train the ansatz of spec by Adam from a seeded initialization

    The best parameters seen are returned. Training stops after
    cfg.max_iters steps, or once the loss has not improved by a relative
    cfg.min_rel_improve for cfg.patience iterations.

    Args:
        spec: Problem to solve
        cfg: Training hyperparameters

    Returns:
        Tuple of (best parameters, report)

    Raises:
        NonFiniteLoss: If the loss or its gradient becomes NaN or infinite
    """
    problem = get_problem(spec)
    points = make_collocation(cfg.n_points, cfg.sampling, cfg.seed)
    objective = CollocationLoss(problem, points)
    initial = init_params(cfg.width, cfg.seed)

    logger.info(
        "Training %s: N=%d, width=%d, seed=%d, lr=%g, max_iters=%d",
        spec.label, cfg.n_points, cfg.width, cfg.seed, cfg.lr, cfg.max_iters,
    )
    started = time.perf_counter()

    theta = initial.as_vector().copy()
    optimizer = Adam(cfg.lr, cfg.beta1, cfg.beta2, cfg.adam_eps)

    best_theta = theta.copy()
    best_loss = np.inf
    best_iteration = 0
    reference_loss = np.inf
    last_improvement = 0
    history = []
    stopped_early = False
    iteration = 0

    while iteration < cfg.max_iters:
        if not np.all(np.isfinite(theta)):
            raise NonFiniteLoss(iteration, float("nan"))
        value, grad = objective.value_and_grad(NetParams.from_vector(theta))
        if not np.isfinite(value) or not np.all(np.isfinite(grad)):
            raise NonFiniteLoss(iteration, value)

        if value < best_loss:
            best_loss, best_theta, best_iteration = value, theta.copy(), iteration
        if value < reference_loss * (1.0 - cfg.min_rel_improve):
            reference_loss, last_improvement = value, iteration
        elif iteration - last_improvement >= cfg.patience:
            stopped_early = True
            break

        if iteration % CHECKPOINT_EVERY == 0:
            history.append((iteration, value))
            logger.debug("iteration %d: loss %.6e (best %.6e)", iteration, value, best_loss)

        optimizer.step(theta, grad)
        iteration += 1

    if not stopped_early:
        # the parameters after the last step have not been scored yet
        if not np.all(np.isfinite(theta)):
            raise NonFiniteLoss(iteration, float("nan"))
        value = objective.value(NetParams.from_vector(theta))
        if not np.isfinite(value):
            raise NonFiniteLoss(iteration, value)
        if value < best_loss:
            best_loss, best_theta, best_iteration = value, theta.copy(), iteration

    report = TrainReport(
        final_loss=best_loss,
        iterations_run=iteration,
        loss_history=history,
        stopped_early=stopped_early,
        best_iteration=best_iteration,
    )
    logger.info(
        "Finished %s after %d iterations (%s): loss %.6e in %.1fs",
        spec.label,
        iteration,
        "early stop" if stopped_early else "budget",
        best_loss,
        time.perf_counter() - started,
    )
    return NetParams.from_vector(best_theta), report
