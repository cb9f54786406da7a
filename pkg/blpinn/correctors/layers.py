"""
Exponential boundary-layer profiles for the linear problem classes
"""
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike


Jet = Tuple[np.ndarray, np.ndarray, np.ndarray]


def _check_eps(eps: float) -> None:
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")


def exp_layer_jet(eps: float, x: ArrayLike) -> Jet:
    """
    Outflow layer e^{-x/ε} with derivatives

    Solves -ε v'' - v' = 0. At 40 layer widths v is at most e^{-40}; where
    the exponential underflows all three components are exactly zero.

    Returns:
        Tuple (v, v', v'')
    """
    _check_eps(eps)
    v = np.exp(-np.asarray(x, dtype=float) / eps)
    return v, -v / eps, v / (eps * eps)


def sqrt_layer_jet(eps: float, x: ArrayLike, side: str = "left") -> Jet:
    """
    Reaction-diffusion layer e^{-x/√ε} (left) or e^{-(1-x)/√ε} (right)

    Solves -ε v'' + v = 0 on either side.

    Args:
        eps: Perturbation parameter
        x: Evaluation point(s)
        side: "left" (layer at x=0) or "right" (layer at x=1)

    Returns:
        Tuple (v, v', v'')
    """
    _check_eps(eps)
    x = np.asarray(x, dtype=float)
    root = np.sqrt(eps)
    if side == "left":
        v = np.exp(-x / root)
        return v, -v / root, v / eps
    if side == "right":
        v = np.exp(-(1.0 - x) / root)
        return v, v / root, v / eps
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")
