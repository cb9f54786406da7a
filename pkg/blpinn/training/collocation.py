"""
Collocation sets in the open unit interval
"""
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, field_validator


class Sampling(str, Enum):
    """How collocation points are placed"""
    EQUISPACED = "equispaced"
    UNIFORM_RANDOM = "uniform_random"


class CollocationSet(BaseModel):
    """Strictly increasing points in (0, 1)"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    points: np.ndarray

    @field_validator("points", mode="before")
    @classmethod
    def check_points(cls, value: ArrayLike) -> np.ndarray:
        points = np.array(value, dtype=float).reshape(-1)
        if points.size < 1:
            raise ValueError("collocation set is empty")
        if not (points[0] > 0.0 and points[-1] < 1.0):
            raise ValueError("collocation points must lie in the open interval (0, 1)")
        if np.any(np.diff(points) <= 0.0):
            raise ValueError("collocation points must be strictly increasing")
        points.setflags(write=False)
        return points

    @property
    def n(self) -> int:
        return int(self.points.size)


def make_collocation(
    n: int,
    sampling: Sampling = Sampling.EQUISPACED,
    seed: int = 0,
) -> CollocationSet:
    """
    Build a collocation set

    Args:
        n: Number of points, at least 2
        sampling: Equispaced x_i = i/(n+1), or sorted uniform draws
        seed: Seed for UniformRandom; the same seed gives the same set

    Raises:
        ValueError: If n < 2
    """
    if n < 2:
        raise ValueError(f"need at least 2 collocation points, got {n}")
    sampling = Sampling(sampling)
    if sampling == Sampling.EQUISPACED:
        return CollocationSet(points=np.arange(1, n + 1) / (n + 1.0))

    rng = np.random.default_rng(seed)
    points = np.empty(0)
    while points.size < n:
        draws = rng.uniform(0.0, 1.0, n - points.size)
        # redraw collisions and the (measure-zero) left endpoint
        points = np.unique(np.concatenate([points, draws[draws > 0.0]]))
    return CollocationSet(points=points)
