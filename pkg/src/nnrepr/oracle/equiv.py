"""Exhaustive equivalence checking over {0,1}^n."""
import logging
import time
from typing import Any, Callable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..boolfn.truthtable import point
from ..core.config import MAX_ARITY
from ..core.errors import ArityError
from ..core.parallel import map_ranges, map_ranges_async
from ..core.types import EquivStatus, Output

logger = logging.getLogger(__name__)

Evaluator = Callable[[Sequence[int]], Any]


class EquivReport(BaseModel):
    """Outcome of comparing two evaluators on every input"""
    status: EquivStatus
    witness: Optional[Tuple[int, ...]] = None
    inputs_checked: int
    wall_time: float = 0.0

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _witness_present(self) -> "EquivReport":
        if self.status != EquivStatus.EQUAL and self.witness is None:
            raise ValueError(f"{self.status.value} needs a witness input")
        return self

    @property
    def equal(self) -> bool:
        return self.status == EquivStatus.EQUAL


def _check_arity(f: Any, n: int) -> None:
    arity = getattr(f, "arity", None)
    if arity is not None and arity != n:
        raise ArityError(f"{type(f).__name__} has arity {arity}, expected {n}")


def _scan(a: Evaluator, b: Evaluator, n: int, lo: int, hi: int) -> Tuple[int, int]:
    """(first undefined index, first mismatch index) in [lo, hi), -1 when absent"""
    undefined = mismatch = -1
    for idx in range(lo, hi):
        x = point(idx, n)
        va, vb = int(a(x)), int(b(x))
        if va == Output.UNDEFINED or vb == Output.UNDEFINED:
            return idx, mismatch
        if mismatch < 0 and va != vb:
            mismatch = idx
    return undefined, mismatch


def _merge(chunks: List[Tuple[int, int]], n: int, started: float) -> EquivReport:
    undefined = [u for u, _ in chunks if u >= 0]
    mismatch = [m for _, m in chunks if m >= 0]
    total = 1 << n
    elapsed = time.perf_counter() - started
    if undefined:
        witness = point(min(undefined), n)
        logger.info("undefined output at %s", witness)
        return EquivReport(status=EquivStatus.ILL_DEFINED, witness=witness, inputs_checked=total, wall_time=elapsed)
    if mismatch:
        witness = point(min(mismatch), n)
        logger.info("outputs differ at %s", witness)
        return EquivReport(status=EquivStatus.MISMATCH, witness=witness, inputs_checked=total, wall_time=elapsed)
    return EquivReport(status=EquivStatus.EQUAL, inputs_checked=total, wall_time=elapsed)


def equiv_check(a: Evaluator, b: Evaluator, n: int, jobs: int = 1) -> EquivReport:
    """Compare two evaluators on all 2^n inputs; the lowest-index witness is reported.

    Any Undefined output makes the result ILL_DEFINED. With jobs > 1 both
    evaluators must be picklable.
    """
    if n < 0 or n > MAX_ARITY:
        raise ArityError(f"arity {n} outside [0, {MAX_ARITY}]")
    _check_arity(a, n)
    _check_arity(b, n)
    started = time.perf_counter()
    chunks = map_ranges(_scan, 1 << n, jobs, args=(a, b, n))
    return _merge(chunks, n, started)


async def equiv_check_async(a: Evaluator, b: Evaluator, n: int, jobs: int = 1) -> EquivReport:
    """equiv_check driven from an event loop"""
    if n < 0 or n > MAX_ARITY:
        raise ArityError(f"arity {n} outside [0, {MAX_ARITY}]")
    _check_arity(a, n)
    _check_arity(b, n)
    started = time.perf_counter()
    chunks = await map_ranges_async(_scan, 1 << n, jobs, args=(a, b, n))
    return _merge(chunks, n, started)


__all__ = ['EquivReport', 'equiv_check', 'equiv_check_async']
