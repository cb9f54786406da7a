"""
Mean-square residual loss and its exact parameter gradient

The gradient is assembled by the chain rule: residual partials with respect
to V = (û, û_x, û_xx, û(0), û(1)) times the closed-form parameter gradients
of the network at the collocation points and at both boundaries.
"""
from typing import Tuple, Union

import numpy as np

from ..network import NetParams, eval_jet, eval_with_grad
from ..problems import BoundaryValueProblem, ProblemSpec, get_problem
from ..problems.ansatz import BOUNDARY_POINTS, boundary_jet
from ..problems.base import V_AT0, V_AT1, V_U, V_UX, V_UXX
from .collocation import CollocationSet


class CollocationLoss:
    """
    Loss of one problem on a fixed collocation set

    Parameter-independent data at the points is prepared once.
    """

    def __init__(self, problem: BoundaryValueProblem, points: CollocationSet):
        self.problem = problem
        self.points = points
        self.data = problem.prepare(points.points)

    def residual(self, p: NetParams) -> np.ndarray:
        net = eval_jet(p, self.data.x)
        return self.problem.residual_terms(net, boundary_jet(p), self.data)[1].value

    def value(self, p: NetParams) -> float:
        r = self.residual(p)
        return float(np.sum(r * r) / r.size)

    def value_and_grad(self, p: NetParams) -> Tuple[float, np.ndarray]:
        """
        Loss and its gradient over [w1 | b1 | w2]
        """
        net, dnet = eval_with_grad(p, self.data.x)
        boundary, dboundary = eval_with_grad(p, BOUNDARY_POINTS)
        _, partials = self.problem.residual_terms(net, boundary, self.data)

        r = partials.value
        n = r.size
        weight = (2.0 / n) * r
        wrt = partials.wrt

        grad = (
            (weight * wrt[V_U]) @ dnet.du
            + (weight * wrt[V_UX]) @ dnet.dux
            + (weight * wrt[V_UXX]) @ dnet.duxx
            + np.sum(weight * wrt[V_AT0]) * dboundary.du[0]
            + np.sum(weight * wrt[V_AT1]) * dboundary.du[1]
        )
        return float(np.sum(r * r) / n), grad


def _objective(spec: Union[ProblemSpec, BoundaryValueProblem], points: CollocationSet) -> CollocationLoss:
    problem = spec if isinstance(spec, BoundaryValueProblem) else get_problem(spec)
    return CollocationLoss(problem, points)


def loss(spec: ProblemSpec, p: NetParams, points: CollocationSet) -> float:
    """(1/N) Σ residual(x_i)²"""
    return _objective(spec, points).value(p)


def loss_grad(spec: ProblemSpec, p: NetParams, points: CollocationSet) -> np.ndarray:
    """
    Exact gradient of the loss with respect to every network parameter

    Includes the dependence of the ansatz on û(0) and û(1).
    """
    return _objective(spec, points).value_and_grad(p)[1]
