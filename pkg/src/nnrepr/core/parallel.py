"""Range partitioning over a process pool with deterministic merge."""
import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Any, Callable, List, Optional, Sequence, Tuple, TypeVar

logger = logging.getLogger(__name__)

R = TypeVar('R')

# Smallest chunk worth shipping to a worker process
MIN_CHUNK = 1 << 10


def chunk_ranges(total: int, jobs: int, min_chunk: int = MIN_CHUNK) -> List[Tuple[int, int]]:
    """Split [0, total) into contiguous ranges, a few per worker"""
    if total <= 0:
        return []
    pieces = max(1, min(jobs * 4, (total + min_chunk - 1) // min_chunk))
    step = (total + pieces - 1) // pieces
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def map_ranges(
    fn: Callable[..., R],
    total: int,
    jobs: int = 1,
    args: Sequence[Any] = (),
    min_chunk: int = MIN_CHUNK
) -> List[R]:
    """Run fn(*args, lo, hi) over the partition of [0, total), results in range order.

    jobs == 1 runs inline; otherwise fn and args must be picklable.
    """
    ranges = chunk_ranges(total, jobs, min_chunk)
    if jobs <= 1 or len(ranges) <= 1:
        return [fn(*args, lo, hi) for lo, hi in ranges]
    logger.debug("scanning %d items in %d chunks on %d workers", total, len(ranges), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, *args, lo, hi) for lo, hi in ranges]
        return [f.result() for f in futures]


async def map_ranges_async(
    fn: Callable[..., R],
    total: int,
    jobs: int = 1,
    args: Sequence[Any] = (),
    executor: Optional[ProcessPoolExecutor] = None,
    min_chunk: int = MIN_CHUNK
) -> List[R]:
    """asyncio flavour of map_ranges: chunks run in an executor, gathered in order"""
    loop = asyncio.get_running_loop()
    ranges = chunk_ranges(total, jobs, min_chunk)
    if jobs <= 1 and executor is None:
        return [fn(*args, lo, hi) for lo, hi in ranges]
    own = executor is None
    pool = executor or ProcessPoolExecutor(max_workers=jobs)
    try:
        tasks = [loop.run_in_executor(pool, partial(fn, *args, lo, hi)) for lo, hi in ranges]
        return list(await asyncio.gather(*tasks))
    finally:
        if own:
            pool.shutdown()


__all__ = ['chunk_ranges', 'map_ranges', 'map_ranges_async', 'MIN_CHUNK']
