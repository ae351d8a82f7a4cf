"""Exception hierarchy shared by every nnrepr module"""
from typing import Optional, Sequence


class NNReprError(Exception):
    """Base class for all nnrepr errors"""


class ArityError(NNReprError, ValueError):
    """Input length or arity cap violated"""


class RepresentationError(NNReprError, ValueError):
    """A representation is malformed or cannot exist for the requested function"""


class ConversionError(NNReprError, RuntimeError):
    """A conversion pass could not certify its output"""

    def __init__(
        self,
        message: str,
        witness: Optional[Sequence[int]] = None,
        inequality: Optional[str] = None
    ):
        super().__init__(message)
        self.witness = tuple(witness) if witness is not None else None
        self.inequality = inequality


class SearchBudgetExceeded(NNReprError, RuntimeError):
    """Exhaustive search ran out of candidate evaluations"""

    def __init__(self, message: str, m: int, cursor: int):
        super().__init__(message)
        self.m = m
        self.cursor = cursor


class CheckpointError(NNReprError, RuntimeError):
    """Checkpoint storage failed"""


__all__ = [
    'NNReprError',
    'ArityError',
    'RepresentationError',
    'ConversionError',
    'SearchBudgetExceeded',
    'CheckpointError',
]
