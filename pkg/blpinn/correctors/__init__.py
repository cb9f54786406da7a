"""
Closed-form boundary-layer correctors
"""
from .burgers import (
    burgers_phi_at_zero,
    burgers_phi_jet,
    burgers_phi_tilde_jet,
    burgers_u0,
    check_burgers_forcing,
)
from .layers import exp_layer_jet, sqrt_layer_jet
from .profile import LayerProfile, ProfileKind

__all__ = [
    "burgers_phi_at_zero",
    "burgers_phi_jet",
    "burgers_phi_tilde_jet",
    "burgers_u0",
    "check_burgers_forcing",
    "exp_layer_jet",
    "sqrt_layer_jet",
    "LayerProfile",
    "ProfileKind",
]
