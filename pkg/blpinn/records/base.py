"""
Run-event records for experiment cells
"""
from abc import ABC, abstractmethod
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class RunEventType(str, Enum):
    """Lifecycle of one experiment cell"""
    STARTED = "started"
    COMPLETED = "completed"
    FAILED = "failed"


class RunEvent(BaseModel):
    """
    One line of the run log

    Fields:
        cell_id: Identifier of the experiment cell
        event_type: Lifecycle stage
        timestamp: Event time
        data: Report row on completion, error details on failure
    """
    cell_id: str
    event_type: RunEventType
    timestamp: datetime = Field(default_factory=datetime.now)
    data: Dict[str, Any] = Field(default_factory=dict)


class BaseRunStore(ABC):
    """Base class for run-event storage"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config or {}

    @abstractmethod
    async def initialize(self):
        """Prepare the store"""
        pass

    @abstractmethod
    async def store(self, event: RunEvent) -> bool:
        """
        Store an event

        Returns:
            True if the event was written
        """
        pass

    @abstractmethod
    async def retrieve(
        self,
        cell_id: Optional[str] = None,
        event_type: Optional[RunEventType] = None,
    ) -> List[RunEvent]:
        """Events in timestamp order, optionally filtered"""
        pass

    async def completed_rows(self) -> List[Dict[str, Any]]:
        """Report rows of every completed cell"""
        events = await self.retrieve(event_type=RunEventType.COMPLETED)
        return [event.data for event in events]
