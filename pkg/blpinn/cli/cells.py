"""
Experiment cells: one (problem, ε, N, seed) training run
"""
from datetime import datetime
from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field

from ..problems import ProblemKind, ProblemSpec, create_forcing
from ..reference import DEFAULT_MESH
from ..training import TrainConfig


class CellStatus(str, Enum):
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


class ExperimentCell(BaseModel):
    """
    A single training run and its evaluation

    Holds only plain data so cells can be shipped to worker processes.
    """

    # Identification
    label: str
    kind: ProblemKind
    eps: float
    forcing: str = "const:1"
    enriched: bool = True

    # Execution data
    train: TrainConfig
    reference_mesh: int = DEFAULT_MESH

    # Status
    status: CellStatus = CellStatus.PENDING
    result: Optional[Dict[str, Any]] = None
    error: Optional[str] = None
    started_at: Optional[str] = None
    completed_at: Optional[str] = None

    @property
    def cell_id(self) -> str:
        return f"{self.label}-eps{self.eps:g}-N{self.train.n_points}-seed{self.train.seed}"

    def spec(self) -> ProblemSpec:
        return ProblemSpec(
            kind=self.kind,
            eps=self.eps,
            forcing=create_forcing(self.forcing),
            enriched=None if self.kind.is_regular else self.enriched,
        )

    def mark_started(self):
        self.status = CellStatus.RUNNING
        self.started_at = datetime.now().isoformat()

    def mark_completed(self, result: Dict[str, Any]):
        self.status = CellStatus.COMPLETED
        self.result = result
        self.completed_at = datetime.now().isoformat()

    def mark_failed(self, error: str):
        self.status = CellStatus.FAILED
        self.error = error
        self.completed_at = datetime.now().isoformat()
