"""
Explicit two-layer sigmoid network

û(x; θ) = Σ_j w2_j σ(w1_j x + b1_j), with its first two spatial derivatives
and the exact parameter gradients of all three, written out in closed form.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from .activations import sigmoid_jet, sigmoid_jet3


DEFAULT_WIDTH = 50
DEFAULT_SLOPE_SCALE = 8.0


class NetParams(BaseModel):
    """
    Trainable parameters (W¹, b¹, W²) of the two-layer network

    Immutable: arrays are copied on construction and made read-only.
    There is no output bias.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    w1: np.ndarray
    b1: np.ndarray
    w2: np.ndarray

    @field_validator("w1", "b1", "w2", mode="before")
    @classmethod
    def as_readonly_vector(cls, value: ArrayLike) -> np.ndarray:
        array = np.array(value, dtype=float).reshape(-1)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def check_shapes(self) -> "NetParams":
        n1 = self.w1.size
        if n1 < 1:
            raise ValueError("hidden width must be at least 1")
        if self.b1.size != n1 or self.w2.size != n1:
            raise ValueError(
                f"parameter lengths differ: w1={n1}, b1={self.b1.size}, w2={self.w2.size}"
            )
        for name in ("w1", "b1", "w2"):
            if not np.all(np.isfinite(getattr(self, name))):
                raise ValueError(f"{name} contains non-finite entries")
        return self

    @property
    def n1(self) -> int:
        """Hidden width N1"""
        return int(self.w1.size)

    @property
    def size(self) -> int:
        """Total number of trainable scalars (3·N1)"""
        return 3 * self.n1

    def as_vector(self) -> np.ndarray:
        """Flatten to [w1 | b1 | w2]; the gradient layout uses the same order"""
        return np.concatenate([self.w1, self.b1, self.w2])

    @classmethod
    def from_vector(cls, theta: ArrayLike) -> "NetParams":
        """Inverse of as_vector"""
        theta = np.asarray(theta, dtype=float)
        if theta.ndim != 1 or theta.size % 3 != 0:
            raise ValueError(f"parameter vector length must be a multiple of 3, got {theta.shape}")
        w1, b1, w2 = np.split(theta, 3)
        return cls(w1=w1, b1=b1, w2=w2)

    def with_output_scaled(self, factor: float) -> "NetParams":
        """Copy with W² multiplied by factor"""
        return NetParams(w1=self.w1, b1=self.b1, w2=factor * self.w2)


@dataclass(frozen=True)
class NetJet:
    """Network value and its first two spatial derivatives"""
    u: np.ndarray
    ux: np.ndarray
    uxx: np.ndarray


@dataclass(frozen=True)
class ParamGradJet:
    """
    Parameter gradients of (û, û_x, û_xx)

    Each array has shape x.shape + (3·N1,), columns ordered [w1 | b1 | w2].
    """
    du: np.ndarray
    dux: np.ndarray
    duxx: np.ndarray


def _pre_activation(p: NetParams, x: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    z = np.multiply.outer(x, p.w1) + p.b1
    return x, z


def _contract(a: np.ndarray, weights: np.ndarray) -> np.ndarray:
    # row-wise reduction gives identical results for a point whether it is
    # evaluated alone or inside a batch
    return np.sum(a * weights, axis=-1)


def eval_jet(p: NetParams, x: ArrayLike) -> NetJet:
    """
    Evaluate û, û_x, û_xx at x (scalar or array)

    Args:
        p: Network parameters
        x: Evaluation point(s) in [0, 1]

    Returns:
        NetJet with arrays shaped like x
    """
    _, z = _pre_activation(p, x)
    s, s1, s2 = sigmoid_jet(z)
    u = _contract(s, p.w2)
    ux = _contract(s1, p.w2 * p.w1)
    uxx = _contract(s2, p.w2 * p.w1 * p.w1)
    return NetJet(u=u, ux=ux, uxx=uxx)


def param_grad_jet(p: NetParams, x: ArrayLike) -> ParamGradJet:
    """
    Exact gradients of û, û_x, û_xx with respect to every parameter

    Uses sigmoid derivatives up to third order; columns follow ParamGradJet.
    """
    return eval_with_grad(p, x)[1]


def eval_with_grad(p: NetParams, x: ArrayLike) -> Tuple[NetJet, ParamGradJet]:
    """Network jet and its parameter gradients from one sigmoid evaluation"""
    x, z = _pre_activation(p, x)
    s, s1, s2, s3 = sigmoid_jet3(z)
    w1, w2 = p.w1, p.w2
    xs = x[..., np.newaxis]

    jet = NetJet(
        u=_contract(s, w2),
        ux=_contract(s1, w2 * w1),
        uxx=_contract(s2, w2 * w1 * w1),
    )

    du = np.concatenate([w2 * s1 * xs, w2 * s1, s], axis=-1)
    dux = np.concatenate(
        [w2 * (s1 + w1 * s2 * xs), w2 * w1 * s2, w1 * s1],
        axis=-1,
    )
    duxx = np.concatenate(
        [
            w2 * (2.0 * w1 * s2 + w1 * w1 * s3 * xs),
            w2 * w1 * w1 * s3,
            w1 * w1 * s2,
        ],
        axis=-1,
    )
    return jet, ParamGradJet(du=du, dux=dux, duxx=duxx)


def init_params(
    n1: int = DEFAULT_WIDTH,
    seed: int = 0,
    slope_scale: float = DEFAULT_SLOPE_SCALE,
) -> NetParams:
    """
    Seeded initialization

    w1, b1 ~ U[-1, 1] with w1 then multiplied by slope_scale, so hidden units
    have varied slopes across (0, 1); w2 ~ U[-0.1, 0.1].

    Raises:
        ValueError: If n1 < 1
    """
    if n1 < 1:
        raise ValueError(f"hidden width must be positive, got {n1}")
    rng = np.random.default_rng(seed)
    w1 = rng.uniform(-1.0, 1.0, n1) * slope_scale
    b1 = rng.uniform(-1.0, 1.0, n1)
    w2 = rng.uniform(-0.1, 0.1, n1)
    return NetParams(w1=w1, b1=b1, w2=w2)
