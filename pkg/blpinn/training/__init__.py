"""
Collocation, loss, gradients and the Adam training loop
"""
from .collocation import CollocationSet, Sampling, make_collocation
from .config import CHECKPOINT_EVERY, TrainConfig, TrainReport
from .loss import CollocationLoss, loss, loss_grad
from .optimizer import Adam
from .trainer import train

__all__ = [
    "CollocationSet",
    "Sampling",
    "make_collocation",
    "CHECKPOINT_EVERY",
    "TrainConfig",
    "TrainReport",
    "CollocationLoss",
    "loss",
    "loss_grad",
    "Adam",
    "train",
]
