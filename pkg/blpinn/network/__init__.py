"""
Two-layer sigmoid network with closed-form derivatives
"""
from .activations import sigmoid, sigmoid_jet, sigmoid_jet3
from .net2 import (
    DEFAULT_WIDTH,
    NetJet,
    NetParams,
    ParamGradJet,
    eval_jet,
    eval_with_grad,
    init_params,
    param_grad_jet,
)

__all__ = [
    "sigmoid",
    "sigmoid_jet",
    "sigmoid_jet3",
    "DEFAULT_WIDTH",
    "NetJet",
    "NetParams",
    "ParamGradJet",
    "eval_jet",
    "eval_with_grad",
    "init_params",
    "param_grad_jet",
]
