"""
Tagged boundary-layer profile
"""
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .burgers import Jet, burgers_phi_tilde_jet
from .layers import exp_layer_jet, sqrt_layer_jet


class ProfileKind(str, Enum):
    """Shape of a corrector profile"""
    OUTFLOW_EXP = "outflow_exp"
    LEFT_SQRT_EXP = "left_sqrt_exp"
    RIGHT_SQRT_EXP = "right_sqrt_exp"
    BURGERS_PHI = "burgers_phi"


class LayerProfile(BaseModel):
    """
    One corrector profile with its scale

    Fields:
        kind: Profile shape
        eps: Perturbation parameter ε
        u0_at_0: Limit solution at x=0 (BurgersPhi only)
    """
    model_config = ConfigDict(frozen=True)

    kind: ProfileKind
    eps: float = Field(gt=0)
    u0_at_0: float = 0.0

    @model_validator(mode="after")
    def check_burgers_direction(self) -> "LayerProfile":
        if self.kind == ProfileKind.BURGERS_PHI and not self.u0_at_0 < 0:
            raise ValueError("BurgersPhi requires u0_at_0 < 0 (outflow at x=0)")
        return self

    @property
    def scale(self) -> float:
        """Layer thickness scale: ε, or √ε for the reaction-diffusion layers"""
        if self.kind in (ProfileKind.LEFT_SQRT_EXP, ProfileKind.RIGHT_SQRT_EXP):
            return float(np.sqrt(self.eps))
        return self.eps

    @property
    def wall(self) -> str:
        """Boundary the layer is attached to: "left" (x=0) or "right" (x=1)"""
        return "right" if self.kind == ProfileKind.RIGHT_SQRT_EXP else "left"

    def jet(self, x: ArrayLike) -> Jet:
        """Profile value and first two derivatives (normalized to 1 at its wall)"""
        if self.kind == ProfileKind.OUTFLOW_EXP:
            return exp_layer_jet(self.eps, x)
        if self.kind == ProfileKind.LEFT_SQRT_EXP:
            return sqrt_layer_jet(self.eps, x, "left")
        if self.kind == ProfileKind.RIGHT_SQRT_EXP:
            return sqrt_layer_jet(self.eps, x, "right")
        return burgers_phi_tilde_jet(self.eps, self.u0_at_0, x)
