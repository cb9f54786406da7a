"""
Training configuration and report models
"""
from typing import List, Tuple

from pydantic import BaseModel, Field

from ..network import DEFAULT_WIDTH
from .collocation import Sampling


CHECKPOINT_EVERY = 100


class TrainConfig(BaseModel):
    """
    Hyperparameters of one training run
    """
    # Collocation
    n_points: int = Field(default=50, ge=2)
    sampling: Sampling = Sampling.EQUISPACED

    # Network
    width: int = Field(default=DEFAULT_WIDTH, ge=1)
    seed: int = 0

    # Adam
    max_iters: int = Field(default=50000, ge=0)
    lr: float = Field(default=1e-3, gt=0, lt=1)
    beta1: float = Field(default=0.9, gt=0, lt=1)
    beta2: float = Field(default=0.999, gt=0, lt=1)
    adam_eps: float = Field(default=1e-8, gt=0)

    # Early stopping
    patience: int = Field(default=2000, ge=1)
    min_rel_improve: float = Field(default=1e-8, ge=0)

    class Config:
        extra = "forbid"


class TrainReport(BaseModel):
    """
    Outcome of a training run

    loss_history holds (iteration, loss) every CHECKPOINT_EVERY iterations.
    """
    final_loss: float = Field(ge=0)
    iterations_run: int = Field(ge=0)
    loss_history: List[Tuple[int, float]] = Field(default_factory=list)
    stopped_early: bool = False
    best_iteration: int = 0

    def best_envelope(self) -> List[float]:
        """Running minimum of the recorded losses"""
        envelope: List[float] = []
        for _, value in self.loss_history:
            envelope.append(value if not envelope else min(envelope[-1], value))
        return envelope
