"""
JSONL run log
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from .base import BaseRunStore, RunEvent, RunEventType


logger = logging.getLogger(__name__)

RUN_LOG_NAME = "runs.jsonl"


class FileRunStore(BaseRunStore):
    """
    Appends one JSON object per event to <base_path>/runs.jsonl

    Lines are flushed as they are written, so completed cells survive a
    later failure of the experiment.
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__(config)
        self.base_path = Path(self.config.get("base_path", "results"))
        self.file_path = self.base_path / self.config.get("file_name", RUN_LOG_NAME)

    async def initialize(self):
        self.base_path.mkdir(parents=True, exist_ok=True)

    async def store(self, event: RunEvent) -> bool:
        try:
            with open(self.file_path, "a", encoding="utf-8") as f:
                f.write(event.model_dump_json() + "\n")
            return True
        except OSError as e:
            logger.warning("Could not append to %s: %s", self.file_path, e)
            return False

    async def retrieve(
        self,
        cell_id: Optional[str] = None,
        event_type: Optional[RunEventType] = None,
    ) -> List[RunEvent]:
        if not self.file_path.exists():
            return []

        events = []
        with open(self.file_path, "r", encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if not line:
                    continue
                try:
                    events.append(RunEvent(**json.loads(line)))
                except (json.JSONDecodeError, ValidationError):
                    # a line cut short by an interrupted run
                    continue

        if cell_id:
            events = [e for e in events if e.cell_id == cell_id]
        if event_type:
            events = [e for e in events if e.event_type == event_type]
        events.sort(key=lambda e: e.timestamp)
        return events
