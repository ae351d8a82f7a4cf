"""Shared enums, abstract bases, settings and errors.

The pipeline lives in ``nnrepr.core.pipeline`` and is imported from there
(or from the top-level package) since it depends on the passes.
"""

from .base import BaseCheckpointStore, BasePass, BaseRepresentation, BoundCheck, PassReport, PassTrace
from .config import DEFAULT_BUDGET, MAX_ARITY, Settings, configure_logging
from .errors import (
    ArityError,
    CheckpointError,
    ConversionError,
    NNReprError,
    RepresentationError,
    SearchBudgetExceeded,
)
from .parallel import chunk_ranges, map_ranges, map_ranges_async
from .types import CircuitVariant, ClauseKind, Comparison, EquivStatus, FamilyName, ModelKind, Output, PipelineState

__all__ = [
    # Base classes
    'BaseRepresentation',
    'BasePass',
    'BaseCheckpointStore',
    'BoundCheck',
    'PassReport',
    'PassTrace',
    # Types
    'Output',
    'ModelKind',
    'EquivStatus',
    'ClauseKind',
    'FamilyName',
    'Comparison',
    'CircuitVariant',
    'PipelineState',
    # Configuration
    'Settings',
    'configure_logging',
    'MAX_ARITY',
    'DEFAULT_BUDGET',
    # Errors
    'NNReprError',
    'ArityError',
    'RepresentationError',
    'ConversionError',
    'SearchBudgetExceeded',
    'CheckpointError',
    # Parallel scans
    'chunk_ranges',
    'map_ranges',
    'map_ranges_async',
]
