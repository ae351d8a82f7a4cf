"""Passes between k-nearest-neighbor representations and order statistics."""
import logging
from itertools import combinations
from typing import List, Tuple

from ..core.config import MAX_ARITY
from ..core.errors import RepresentationError
from ..models.forms import LinearForm, dummy_bound, integer_scale
from ..models.nn import KNNRep, well_defined
from ..models.threshold import KStat, MpPTF
from .kstat import distinctify, kstat_equalize
from .nn_mpptf import realise_anchors

logger = logging.getLogger(__name__)


def _require_defined(r: KNNRep, jobs: int) -> None:
    if r.arity > MAX_ARITY:
        return
    report = well_defined(r, jobs=jobs)
    if not report.defined:
        raise RepresentationError(
            f"kNN representation is undefined on {len(report.undefined)} inputs, "
            f"first {report.undefined[0]}"
        )


def knn_subset_terms(r: KNNRep, jobs: int = 1, check: bool = True) -> Tuple[MpPTF, int, int]:
    """mpPTF with its subset-term and padding counts.

    Every k-subset A of anchors contributes the summed distance form; it goes
    left when A holds at least as many positives as negatives. On a
    well-defined input the nearest k anchors are the unique minimal subset,
    so the mpPTF compares the best majority-1 sum against the best
    majority-0 sum. An empty side is padded with a constant above every sum.
    """
    if check:
        _require_defined(r, jobs)
    forms = integer_scale((*r.positive_forms, *r.negative_forms))
    labeled = [(f, 1) for f in forms[:len(r.positive)]] + [
        (f, -1) for f in forms[len(r.positive):]
    ]
    zero = LinearForm.constant(r.arity, 0)
    left: List[LinearForm] = []
    right: List[LinearForm] = []
    for subset in combinations(labeled, r.k):
        total = sum((f for f, _ in subset), zero)
        if sum(sign for _, sign in subset) >= 0:
            left.append(total)
        else:
            right.append(total)
    subset_terms = len(left) + len(right)
    padding = 0
    if not left or not right:
        pad = LinearForm.constant(r.arity, dummy_bound(left + right))
        if not left:
            left.append(pad)
        else:
            right.append(pad)
        padding = 1
    logger.debug("knn_to_mpptf: %d subset terms, %d padding", subset_terms, padding)
    return MpPTF(arity=r.arity, left=tuple(left), right=tuple(right)), subset_terms, padding


def knn_to_mpptf(r: KNNRep, jobs: int = 1, check: bool = True) -> MpPTF:
    """One summed distance form per k-subset of anchors"""
    return knn_subset_terms(r, jobs=jobs, check=check)[0]


def _pad_high(forms: Tuple[LinearForm, ...], need: int, bound: int, arity: int) -> Tuple[LinearForm, ...]:
    missing = need - len(forms)
    if missing <= 0:
        return forms
    return forms + tuple(LinearForm.constant(arity, bound + j) for j in range(missing))


def knn_to_kstat(r: KNNRep, jobs: int = 1, check: bool = True) -> KStat:
    """P forms left, N forms right, with k_l = ceil(k/2) and k_r = floor(k/2) + 1.

    Among the k nearest anchors the majority is positive iff the ceil(k/2)-th
    positive distance is below the (floor(k/2)+1)-th negative one. Sides
    shorter than their index are padded with constants above every distance
    and the indices are then equalised.
    """
    if check:
        _require_defined(r, jobs)
    forms = integer_scale((*r.positive_forms, *r.negative_forms))
    left, right = forms[:len(r.positive)], forms[len(r.positive):]
    k_left, k_right = (r.k + 1) // 2, r.k // 2 + 1
    bound = dummy_bound(forms)
    left = _pad_high(left, k_left, bound, r.arity)
    right = _pad_high(right, k_right, bound, r.arity)
    s = KStat(arity=r.arity, left=left, right=right, k_left=k_left, k_right=k_right)
    return kstat_equalize(s)


def kstat_to_knn(s: KStat) -> KNNRep:
    """Equalise to t, make values distinct, realise as rational anchors with k = 2t - 1"""
    s = distinctify(kstat_equalize(s))
    t = s.k_left
    embedding, positive, negative = realise_anchors(s.arity, s.left, s.right)
    logger.debug("kstat_to_knn: %d anchors, k=%d", len(positive) + len(negative), 2 * t - 1)
    return KNNRep(embedding=embedding, positive=positive, negative=negative, k=2 * t - 1)


__all__ = [
    'knn_to_mpptf',
    'knn_subset_terms',
    'knn_to_kstat',
    'kstat_to_knn',
]
