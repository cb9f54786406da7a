"""
Layer-adapted piecewise-uniform (Shishkin) meshes
"""
from typing import Iterable, Optional, Tuple

import numpy as np

from ..exceptions import MeshTooCoarse


SHISHKIN_CONSTANT = 2.0
MIN_INTERVALS = 64


def transition_point(m: int, scale: float, constant: float = SHISHKIN_CONSTANT) -> float:
    """τ = min(1/4, C·scale·ln m)"""
    return min(0.25, constant * scale * np.log(m))


def shishkin_mesh(
    m: int,
    scale: Optional[float] = None,
    walls: Iterable[str] = ("left",),
    constant: float = SHISHKIN_CONSTANT,
) -> np.ndarray:
    """
    Piecewise-uniform mesh of m intervals on [0, 1]

    With one layer wall, half of the intervals lie in the layer region of
    width τ; with layers at both walls, a quarter lies in each. Without a
    scale the mesh is uniform.

    Args:
        m: Number of intervals, at least 64
        scale: Layer thickness (ε or √ε)
        walls: Subset of {"left", "right"}
        constant: Shishkin constant C

    Returns:
        Strictly increasing nodes with mesh[0] = 0 and mesh[-1] = 1

    Raises:
        MeshTooCoarse: If m < 64
    """
    if m < MIN_INTERVALS:
        raise MeshTooCoarse(f"mesh needs at least {MIN_INTERVALS} intervals, got {m}")
    walls = set(walls)
    unknown = walls - {"left", "right"}
    if unknown:
        raise ValueError(f"unknown layer walls: {sorted(unknown)}")
    if scale is None or not walls:
        return np.linspace(0.0, 1.0, m + 1)

    tau = transition_point(m, scale, constant)
    if walls == {"left", "right"}:
        quarter = m // 4
        middle = m - 2 * quarter
        pieces = [
            np.linspace(0.0, tau, quarter + 1),
            np.linspace(tau, 1.0 - tau, middle + 1)[1:],
            np.linspace(1.0 - tau, 1.0, quarter + 1)[1:],
        ]
        return np.concatenate(pieces)

    half = m // 2
    mesh = np.concatenate([
        np.linspace(0.0, tau, half + 1),
        np.linspace(tau, 1.0, m - half + 1)[1:],
    ])
    if walls == {"right"}:
        mesh = 1.0 - mesh[::-1]
    return mesh


def layer_layout(problem) -> Tuple[Optional[float], Tuple[str, ...]]:
    """Layer scale and walls of a catalogue problem (None, () when regular)"""
    profiles = problem.layer_profiles()
    if not profiles:
        return None, ()
    scale = min(profile.scale for profile in profiles)
    walls = tuple(sorted({profile.wall for profile in profiles}))
    return scale, walls


def problem_mesh(problem, m: int) -> np.ndarray:
    """Shishkin mesh graded towards the layers of problem"""
    scale, walls = layer_layout(problem)
    return shishkin_mesh(m, scale, walls)
