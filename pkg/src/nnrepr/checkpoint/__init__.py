"""Checkpoint store implementations"""

from .store import JsonCheckpointStore

__all__ = ['JsonCheckpointStore']
