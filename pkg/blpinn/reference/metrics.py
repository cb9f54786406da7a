"""
Error norms on graded evaluation grids
"""
from typing import Callable, Iterable, Optional

import numpy as np
from numpy.typing import ArrayLike
from scipy.integrate import trapezoid

from ..exceptions import ZeroTruthNorm
from .mesh import layer_layout, shishkin_mesh


MIN_QUAD_POINTS = 1000
DEFAULT_QUAD_POINTS = 4001
SOLUTION_POINTS = 2001
ZERO_NORM_TOL = 1e-14

Function = Callable[[np.ndarray], ArrayLike]


def evaluation_grid(
    quad_points: int = DEFAULT_QUAD_POINTS,
    scale: Optional[float] = None,
    walls: Iterable[str] = (),
) -> np.ndarray:
    """
    Grid of quad_points nodes on [0, 1], graded towards the layer walls

    Raises:
        ValueError: If quad_points < 1000
    """
    if quad_points < MIN_QUAD_POINTS:
        raise ValueError(f"need at least {MIN_QUAD_POINTS} quadrature points, got {quad_points}")
    return shishkin_mesh(quad_points - 1, scale, walls)


def problem_grid(problem, quad_points: int = DEFAULT_QUAD_POINTS) -> np.ndarray:
    """evaluation_grid graded for the layers of a catalogue problem"""
    scale, walls = layer_layout(problem)
    return evaluation_grid(quad_points, scale, walls)


def l2_norm(values: ArrayLike, grid: np.ndarray) -> float:
    """Composite-trapezoid L² norm of nodal values"""
    values = np.asarray(values, dtype=float)
    return float(np.sqrt(trapezoid(values * values, grid)))


def rel_l2_error(
    predicted: Function,
    truth: Function,
    quad_points: int = DEFAULT_QUAD_POINTS,
    scale: Optional[float] = None,
    walls: Iterable[str] = (),
) -> float:
    """
    ‖predicted - truth‖ / ‖truth‖ in L²(0, 1)

    Args:
        predicted: Vectorized function of x
        truth: Vectorized function of x
        quad_points: Grid size, at least 1000
        scale: Layer thickness used to grade the grid (uniform when None)
        walls: Layer walls, subset of {"left", "right"}

    Raises:
        ZeroTruthNorm: If ‖truth‖ <= 1e-14
    """
    grid = evaluation_grid(quad_points, scale, walls)
    exact = np.asarray(truth(grid), dtype=float)
    denominator = l2_norm(exact, grid)
    if denominator <= ZERO_NORM_TOL:
        raise ZeroTruthNorm(f"reference L² norm {denominator:.3e} is numerically zero")
    return l2_norm(np.asarray(predicted(grid), dtype=float) - exact, grid) / denominator
