"""
Asynchronous cell executor

Runs independent cells in batches bounded by max_parallel, in worker
processes when more than one job is allowed, and logs every lifecycle event
to the run store.
"""
import asyncio
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Any, Dict, List, Optional

from ..records import BaseRunStore, RunEvent, RunEventType
from .cells import CellStatus, ExperimentCell
from .runner import CellOutcome, run_cell


logger = logging.getLogger(__name__)


class CellExecutor:
    """
    Executes experiment cells with bounded parallelism
    """

    def __init__(self, max_parallel: int = 1, store: Optional[BaseRunStore] = None):
        if max_parallel < 1:
            raise ValueError(f"max_parallel must be positive, got {max_parallel}")
        self.max_parallel = max_parallel
        self.store = store
        self._pool: Optional[Executor] = None

    async def _record(self, cell: ExperimentCell, event_type: RunEventType, data: Dict[str, Any]):
        if self.store is not None:
            await self.store.store(RunEvent(cell_id=cell.cell_id, event_type=event_type, data=data))

    async def execute(self, cell: ExperimentCell) -> CellOutcome:
        """
        Run one cell

        Raises:
            Whatever run_cell raises; the cell is marked failed first
        """
        cell.mark_started()
        await self._record(cell, RunEventType.STARTED, {"label": cell.label})
        try:
            if self._pool is None:
                outcome = run_cell(cell)
            else:
                loop = asyncio.get_running_loop()
                outcome = await loop.run_in_executor(self._pool, run_cell, cell)
        except Exception as e:
            cell.mark_failed(str(e))
            await self._record(
                cell, RunEventType.FAILED, {"error": str(e), "error_type": type(e).__name__}
            )
            raise
        cell.mark_completed(outcome.row)
        await self._record(cell, RunEventType.COMPLETED, outcome.row)
        return outcome

    async def execute_all(self, cells: List[ExperimentCell]) -> Dict[str, Any]:
        """
        Run all cells in batches of at most max_parallel

        Returns:
            Summary with counts, outcomes in cell order (None where failed)
            and the exceptions of failed cells
        """
        summary: Dict[str, Any] = {
            "total": len(cells),
            "completed": 0,
            "failed": 0,
            "outcomes": [],
            "errors": [],
        }
        if self.max_parallel > 1:
            self._pool = ProcessPoolExecutor(max_workers=self.max_parallel)
        try:
            for start in range(0, len(cells), self.max_parallel):
                batch = cells[start:start + self.max_parallel]
                results = await asyncio.gather(
                    *[self.execute(cell) for cell in batch],
                    return_exceptions=True,
                )
                for cell, result in zip(batch, results):
                    if isinstance(result, Exception):
                        summary["failed"] += 1
                        summary["errors"].append({"cell": cell.cell_id, "error": result})
                        summary["outcomes"].append(None)
                        logger.error("Cell %s failed: %s", cell.cell_id, result)
                    elif cell.status == CellStatus.COMPLETED:
                        summary["completed"] += 1
                        summary["outcomes"].append(result)
        finally:
            if self._pool is not None:
                self._pool.shutdown()
                self._pool = None
        return summary
