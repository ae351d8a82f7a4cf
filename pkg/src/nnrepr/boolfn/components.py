import logging

import numpy as np

from ..core.accel import GOT_NUMBA, count_components
from .truthtable import BoolFn

logger = logging.getLogger(__name__)


def components(f: BoolFn) -> int:
    """Connected components of f^-1(1) in the Hamming cube graph"""
    table = np.ascontiguousarray(f.require_table(), dtype=np.bool_)
    if not GOT_NUMBA and f.arity > 16:
        logger.warning("counting components of a %d-variable table without numba", f.arity)
    return int(count_components(table, f.arity))


__all__ = ['components']
