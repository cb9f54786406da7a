"""
Run-event log of experiment cells
"""
from .base import BaseRunStore, RunEvent, RunEventType
from .file import RUN_LOG_NAME, FileRunStore

__all__ = [
    "BaseRunStore",
    "RunEvent",
    "RunEventType",
    "RUN_LOG_NAME",
    "FileRunStore",
]
