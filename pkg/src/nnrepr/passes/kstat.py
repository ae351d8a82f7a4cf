"""Order-statistic passes: equalising statistic indices and switching
between the two-sided and the labeled single-list forms."""
import logging
from typing import List, Optional, Tuple

from ..boolfn.substitution import Substitution
from ..boolfn.truthtable import all_inputs
from ..core.config import MAX_ARITY
from ..core.types import Output
from ..models.forms import LinearForm, dummy_bound
from ..models.nn import NNRep
from ..models.threshold import KStat, LabeledKStat
from .nn_mpptf import mpptf_to_kstat, nn_to_mpptf

logger = logging.getLogger(__name__)


def kstat_equalize(s: KStat) -> KStat:
    """Pad the side with the smaller index with constants below every genuine value"""
    if s.k_left == s.k_right:
        return s
    b = dummy_bound((*s.left, *s.right))
    gap = abs(s.k_left - s.k_right)
    dummies = tuple(LinearForm.constant(s.arity, -b - 1 - j) for j in range(gap))
    logger.debug("kstat_equalize: B=%d, %d dummies", b, gap)
    if s.k_left < s.k_right:
        return KStat(arity=s.arity, left=dummies + s.left, right=s.right,
                     k_left=s.k_right, k_right=s.k_right)
    return KStat(arity=s.arity, left=s.left, right=dummies + s.right,
                 k_left=s.k_left, k_right=s.k_left)


def distinctify(s: KStat) -> KStat:
    """Make every value distinct without changing the strict comparison.

    Forms are multiplied by the form count p; right forms take residues
    0..l2-1 and left forms l2..p-1, so a former tie now favours the right.
    """
    p = len(s.left) + len(s.right)
    right = tuple(f.scale(p).shift(j) for j, f in enumerate(s.right))
    left = tuple(f.scale(p).shift(len(s.right) + i) for i, f in enumerate(s.left))
    return KStat(arity=s.arity, left=left, right=right, k_left=s.k_left, k_right=s.k_right)


def twosided_to_labeled(s: KStat) -> LabeledKStat:
    """K = k_l + k_r copies of each left form and K+1 of each right form.

    After distinctness the values are scaled by K(K+1); left copy j sits at
    +j(K+1), right copy j at +jK, and copy j carries label 1 iff j >= k_l.
    The (K-1)(K+1)+1 = K^2-th statistic then lands on a copy whose label is
    the two-sided outcome.
    """
    d = distinctify(s)
    big_k = s.k_left + s.k_right
    scale = big_k * (big_k + 1)
    forms: List[LinearForm] = []
    labels: List[int] = []
    for f in d.left:
        for j in range(big_k):
            forms.append(f.scale(scale).shift(j * (big_k + 1)))
            labels.append(int(j >= s.k_left))
    for f in d.right:
        for j in range(big_k + 1):
            forms.append(f.scale(scale).shift(j * big_k))
            labels.append(int(j >= s.k_left))
    k = (big_k - 1) * (big_k + 1) + 1
    logger.debug("twosided_to_labeled: %d forms, k=%d", len(forms), k)
    return LabeledKStat(arity=s.arity, forms=tuple(forms), labels=tuple(labels), k=k)


def _residue_order(s: LabeledKStat, label_one_first: bool) -> List[int]:
    """Tie-break rank of each form"""
    keyed = sorted(range(len(s.forms)), key=lambda i: (s.labels[i] != int(label_one_first), i))
    rank = [0] * len(s.forms)
    for r, i in enumerate(keyed):
        rank[i] = r
    return rank


def _split_labeled(s: LabeledKStat, label_one_first: bool) -> KStat:
    p = len(s.forms)
    rank = _residue_order(s, label_one_first)
    left: List[LinearForm] = []
    right: List[LinearForm] = []
    for f, lab, r in zip(s.forms, s.labels, rank):
        base = f.scale(2 * p).shift(2 * r)
        if lab:
            left.append(base)
            right.append(base.shift(1))
        else:
            left.append(base.shift(1))
            right.append(base)
    return KStat(arity=s.arity, left=tuple(left), right=tuple(right), k_left=s.k, k_right=s.k)


def _first_disagreement(a: LabeledKStat, b: KStat) -> Optional[Tuple[int, ...]]:
    for x in all_inputs(a.arity):
        if a.evaluate(x) != b.evaluate(x):
            return x
    return None


def materialised_twosided(s: LabeledKStat) -> KStat:
    """First statistics of the distance forms of every cube point, labeled by s.

    Each point is its own nearest anchor at distance 0, so the result agrees
    with s everywhere whatever its tie pattern. Constant functions get one
    constant form per side.
    """
    ones: List[Tuple[int, ...]] = []
    zeros: List[Tuple[int, ...]] = []
    for x in all_inputs(s.arity):
        (ones if s.evaluate(x) == Output.ONE else zeros).append(x)
    if not ones or not zeros:
        low, high = LinearForm.constant(s.arity, 0), LinearForm.constant(s.arity, 1)
        left, right = (low, high) if ones else (high, low)
        return KStat(arity=s.arity, left=(left,), right=(right,), k_left=1, k_right=1)
    r = NNRep(embedding=Substitution.identity(s.arity), positive=tuple(ones), negative=tuple(zeros))
    return mpptf_to_kstat(nn_to_mpptf(r))


def is_split(s: LabeledKStat, out: KStat) -> bool:
    """Whether out has the one-pair-per-form shape of the split construction"""
    return len(out.left) == len(out.right) == len(s.forms) and out.k_left == out.k_right == s.k


def labeled_to_twosided(s: LabeledKStat, certify: bool = True) -> KStat:
    """Each form becomes a left/right pair at (2v, 2v+1) or (2v+1, 2v) by label.

    Values are first made distinct with even per-form residues. A static
    residue order cannot reproduce the existential tie rule for every tie
    pattern, so the label-1-first and label-1-last orders are certified
    against the source over the whole cube. When both disagree somewhere the
    function is rebuilt from its truth table instead.
    """
    candidates = [_split_labeled(s, True), _split_labeled(s, False)]
    if not certify or s.arity > MAX_ARITY:
        return candidates[0]
    for candidate in candidates:
        witness = _first_disagreement(s, candidate)
        if witness is None:
            return candidate
        logger.debug("labeled_to_twosided: tie order disagrees at %s", witness)
    out = materialised_twosided(s)
    logger.debug("labeled_to_twosided: truth-table construction with %d forms", out.forms)
    return out


__all__ = [
    'kstat_equalize',
    'distinctify',
    'twosided_to_labeled',
    'labeled_to_twosided',
    'materialised_twosided',
    'is_split',
]
