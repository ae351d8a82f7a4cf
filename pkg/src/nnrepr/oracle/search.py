"""Minimal Boolean-anchor search by exhaustive enumeration.

An anchor placed at a point p of the cube is at distance 0 from p, so it
must carry the label f(p). A candidate is therefore just a set of points
containing at least one of each value; sets are enumerated by increasing
size and, within a size, in lexicographic (combinadic) order. The first
success at the smallest size is returned, regardless of how many workers
scanned the ranges.
"""
import logging
from math import comb
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..boolfn.substitution import Substitution
from ..boolfn.truthtable import BoolFn, point
from ..checkpoint.store import JsonCheckpointStore
from ..core.accel import separates
from ..core.config import DEFAULT_BUDGET
from ..core.errors import ArityError, RepresentationError, SearchBudgetExceeded
from ..core.parallel import map_ranges
from ..models.nn import NNRep

logger = logging.getLogger(__name__)

# 2^4 candidate points; larger cubes make every size class astronomically big
SEARCH_MAX_ARITY = 4

# Ranks handed out between checkpoint writes
BATCH = 1 << 14


class SearchResult(BaseModel):
    """Smallest anchor count with a witness; every smaller count was exhausted"""
    m: int
    witness: NNRep
    counts: Dict[int, int]

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


def hamming_matrix(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    diff = idx[:, None] ^ idx[None, :]
    dist = np.zeros(diff.shape, dtype=np.int64)
    for i in range(n):
        dist += (diff >> i) & 1
    return dist


def unrank(rank: int, size: int, m: int) -> List[int]:
    """The rank-th m-subset of range(size) in lexicographic order"""
    chosen: List[int] = []
    x = 0
    for i in range(m):
        while True:
            block = comb(size - x - 1, m - i - 1)
            if rank < block:
                break
            rank -= block
            x += 1
        chosen.append(x)
        x += 1
    return chosen


def _scan_ranks(
    dist: np.ndarray,
    labels: np.ndarray,
    m: int,
    offset: int,
    lo: int,
    hi: int
) -> Tuple[int, int]:
    """(first separating rank or -1, candidates evaluated) over ranks [offset+lo, offset+hi)"""
    size = dist.shape[0]
    evaluated = 0
    for rank in range(offset + lo, offset + hi):
        chosen = np.array(unrank(rank, size, m), dtype=np.int64)
        picked = labels[chosen]
        if picked.all() or not picked.any():
            continue
        evaluated += 1
        if separates(dist, labels, chosen):
            return rank, evaluated
    return -1, evaluated


def _witness(f: BoolFn, chosen: List[int]) -> NNRep:
    n = f.arity
    table = f.require_table()
    return NNRep(
        embedding=Substitution.identity(n),
        positive=tuple(point(p, n) for p in chosen if table[p]),
        negative=tuple(point(p, n) for p in chosen if not table[p]),
    )


def search_key(f: BoolFn) -> str:
    return f"min-hnn-{f.to_hex()}"


def min_hnn_search(
    f: BoolFn,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
    store: Optional[JsonCheckpointStore] = None
) -> SearchResult:
    """Smallest Boolean-anchor NN representation of f.

    Progress (size, rank cursor, per-size counts) is written to the store
    between batches; a later call with the same store resumes from it.
    Raises SearchBudgetExceeded once `budget` candidates were evaluated.
    """
    n = f.arity
    if n > SEARCH_MAX_ARITY:
        raise ArityError(f"minimal anchor search is capped at n={SEARCH_MAX_ARITY}, got {n}")
    table = f.require_table()
    if table.all() or not table.any():
        raise RepresentationError("a constant function has no anchors of both labels")
    size = 1 << n
    dist = hamming_matrix(n)
    labels = table.astype(np.uint8)

    m, cursor = 2, 0
    counts: Dict[int, int] = {}
    key = search_key(f)
    if store is not None:
        saved = store.read(key)
        if saved and saved.get("witness") is not None:
            logger.info("search for %s already finished", key)
            counts = {int(k): int(v) for k, v in saved["counts"].items()}
            return SearchResult(m=int(saved["m"]), witness=_witness(f, saved["witness"]), counts=counts)
        if saved:
            m, cursor = int(saved["m"]), int(saved["cursor"])
            counts = {int(k): int(v) for k, v in saved["counts"].items()}
            logger.info("resuming search for %s at m=%d, cursor=%d", key, m, cursor)
    spent = sum(counts.values())

    while m <= size:
        total = comb(size, m)
        while cursor < total:
            if spent >= budget:
                _save(store, key, m, cursor, counts)
                raise SearchBudgetExceeded(
                    f"budget of {budget} candidates exhausted at m={m}", m=m, cursor=cursor
                )
            batch = min(BATCH, total - cursor, budget - spent)
            chunks = map_ranges(_scan_ranks, batch, jobs, args=(dist, labels, m, cursor), min_chunk=256)
            for rank, evaluated in chunks:
                counts[m] = counts.get(m, 0) + evaluated
                spent += evaluated
                if rank >= 0:
                    witness = _witness(f, unrank(rank, size, m))
                    logger.info("found %d-anchor representation after %d candidates", m, spent)
                    _save(store, key, m, rank, counts, unrank(rank, size, m))
                    return SearchResult(m=m, witness=witness, counts=counts)
            cursor += batch
            _save(store, key, m, cursor, counts)
        logger.info("no %d-anchor representation (%d candidates)", m, counts.get(m, 0))
        m, cursor = m + 1, 0
    raise RepresentationError("no Boolean-anchor representation exists")


def _save(
    store: Optional[JsonCheckpointStore],
    key: str,
    m: int,
    cursor: int,
    counts: Dict[int, int],
    witness: Optional[List[int]] = None
) -> None:
    if store is None:
        return
    store.write(key, {
        "m": m,
        "cursor": cursor,
        "witness": witness,
        "counts": {str(k): v for k, v in counts.items()},
    })
    logger.debug("checkpoint %s: m=%d cursor=%d", key, m, cursor)


__all__ = [
    'SearchResult',
    'min_hnn_search',
    'hamming_matrix',
    'unrank',
    'search_key',
    'SEARCH_MAX_ARITY',
]
