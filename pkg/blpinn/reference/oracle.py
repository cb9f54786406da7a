"""
High-resolution reference solver

Damped Newton iteration on a second-order finite-difference discretization
over a layer-adapted mesh. The discrete operator is the same
DifferentialOperator the residuals use, so every kind of the catalogue with
two Dirichlet conditions can be solved.
"""
import logging
from typing import Tuple

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import spsolve

from ..exceptions import NewtonDivergence
from ..problems import BoundaryValueProblem, ProblemKind, ProblemSpec, get_problem
from .mesh import problem_mesh
from .solution import Provenance, ProvenanceKind, ReferenceSolution


logger = logging.getLogger(__name__)

DEFAULT_MESH = 8192
MAX_NEWTON_ITERS = 50
RESIDUAL_TOL = 1e-12
UPDATE_TOL = 1e-12
MIN_STEP = 1.0 / 1024
SUFFICIENT_DECREASE = 1e-4
ROUNDOFF_FACTOR = 100.0


class FiniteDifferenceSystem:
    """
    Three-point stencils for u' and u'' on a nonuniform mesh

    The u' stencil is second order on any mesh; the u'' stencil is second
    order away from the transition points of a piecewise-uniform mesh.
    """

    def __init__(self, mesh: np.ndarray):
        self.mesh = mesh
        h = np.diff(mesh)
        hm, hp = h[:-1], h[1:]
        total = hm + hp
        n = mesh.size - 2
        shape = (n, n + 2)
        self.first = sparse.diags(
            [-hp / (hm * total), (hp - hm) / (hm * hp), hm / (hp * total)],
            [0, 1, 2],
            shape=shape,
            format="csr",
        )
        self.second = sparse.diags(
            [2.0 / (hm * total), -2.0 / (hm * hp), 2.0 / (hp * total)],
            [0, 1, 2],
            shape=shape,
            format="csr",
        )

    def derivatives(self, u: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return self.first @ u, self.second @ u


def _discrete_residual(
    problem: BoundaryValueProblem, system: FiniteDifferenceSystem, u: np.ndarray, f: np.ndarray
) -> np.ndarray:
    ux, uxx = system.derivatives(u)
    return problem.operator.apply(u[1:-1], ux, uxx) - f


def _jacobian(
    problem: BoundaryValueProblem, system: FiniteDifferenceSystem, u: np.ndarray
) -> sparse.csc_matrix:
    ux, uxx = system.derivatives(u)
    d_u, d_ux, d_uxx = problem.operator.partials(u[1:-1], ux, uxx)
    n = u.size - 2
    d_u = np.broadcast_to(np.asarray(d_u, dtype=float), (n,))
    d_ux = np.broadcast_to(np.asarray(d_ux, dtype=float), (n,))
    d_uxx = np.broadcast_to(np.asarray(d_uxx, dtype=float), (n,))
    full = (
        sparse.diags(d_ux) @ system.first
        + sparse.diags(d_uxx) @ system.second
    )
    return (full[:, 1:-1] + sparse.diags(d_u)).tocsc()


def oracle_solve(spec: ProblemSpec, m: int = DEFAULT_MESH) -> ReferenceSolution:
    """
    Solve the full ε-problem numerically

    Newton starts from u⁰ + φ (zero for the regular kinds) and stops when
    the discrete residual max-norm is at most 1e-12, when the update falls
    to the round-off floor, or after 50 iterations. Each step is halved
    until the residual max-norm decreases.

    Args:
        spec: Problem with two Dirichlet conditions
        m: Number of mesh intervals, at least 64

    Returns:
        ReferenceSolution on the graded mesh

    Raises:
        MeshTooCoarse: If m < 64
        NewtonDivergence: If backtracking cannot reduce the residual
        ValueError: For the hyperbolic kind, which takes one condition only
    """
    if spec.kind == ProblemKind.HYPERBOLIC:
        raise ValueError("the first-order problem has a closed-form solution; no oracle needed")
    problem = get_problem(spec)
    mesh = problem_mesh(problem, m)
    system = FiniteDifferenceSystem(mesh)
    f = np.asarray(spec.forcing(mesh[1:-1]), dtype=float)

    u = np.array(problem.initial_guess(mesh), dtype=float)
    u[0], u[-1] = spec.boundary_values

    residual = _discrete_residual(problem, system, u, f)
    norm = float(np.max(np.abs(residual)))
    iteration = 0
    while iteration < MAX_NEWTON_ITERS:
        logger.debug("Newton %d: residual max-norm %.3e", iteration, norm)
        if norm <= RESIDUAL_TOL:
            break
        jacobian = _jacobian(problem, system, u)
        step = spsolve(jacobian, -residual)
        if float(np.max(np.abs(step))) <= UPDATE_TOL * (1.0 + float(np.max(np.abs(u)))):
            break

        damping = 1.0
        while True:
            trial = u.copy()
            trial[1:-1] += damping * step
            trial_residual = _discrete_residual(problem, system, trial, f)
            trial_norm = float(np.max(np.abs(trial_residual)))
            if np.isfinite(trial_norm) and trial_norm < (1.0 - SUFFICIENT_DECREASE * damping) * norm:
                break
            damping *= 0.5
            if damping < MIN_STEP:
                break
        if damping < MIN_STEP:
            # residual evaluation is only accurate to about eps_mach·‖J‖·‖u‖
            floor = ROUNDOFF_FACTOR * np.finfo(float).eps * (1.0 + float(np.max(np.abs(u))))
            floor *= float(abs(jacobian).sum(axis=1).max())
            if norm <= floor:
                break
            raise NewtonDivergence(iteration, norm)

        u, residual, norm = trial, trial_residual, trial_norm
        iteration += 1
    else:
        logger.warning(
            "Newton stopped after %d iterations with residual %.3e", MAX_NEWTON_ITERS, norm
        )

    logger.info(
        "Oracle %s on %d intervals: %d Newton iterations, residual %.3e",
        spec.label, m, iteration, norm,
    )
    return ReferenceSolution(
        mesh=mesh,
        values=u,
        provenance=Provenance(
            kind=ProvenanceKind.ORACLE_SOLVER, mesh_size=m, newton_iters=iteration
        ),
    )
