"""
blpinn - semi-analytic two-layer PINNs for singularly perturbed boundary value problems

Boundary-layer correctors are embedded in the trial solution so that a
small sigmoid network only has to learn the smooth part of the solution.
"""
from .exceptions import (
    BLPinnError,
    ConfigError,
    DataConditionViolation,
    DegenerateCorrector,
    MeshTooCoarse,
    NewtonDivergence,
    NonFiniteLoss,
    ZeroTruthNorm,
)
from .network import NetParams, eval_jet, init_params, param_grad_jet
from .problems import ProblemKind, ProblemSpec, limit_solution, residual
from .reference import oracle_solve, rel_l2_error
from .training import TrainConfig, TrainReport, loss, loss_grad, make_collocation, train

__version__ = "0.1.0"

__all__ = [
    "BLPinnError",
    "ConfigError",
    "DataConditionViolation",
    "DegenerateCorrector",
    "MeshTooCoarse",
    "NewtonDivergence",
    "NonFiniteLoss",
    "ZeroTruthNorm",
    "NetParams",
    "eval_jet",
    "init_params",
    "param_grad_jet",
    "ProblemKind",
    "ProblemSpec",
    "limit_solution",
    "residual",
    "oracle_solve",
    "rel_l2_error",
    "TrainConfig",
    "TrainReport",
    "loss",
    "loss_grad",
    "make_collocation",
    "train",
]
