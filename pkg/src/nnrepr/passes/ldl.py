"""Decision-list passes: mpPTF to LDL and ELDL to labeled kSTAT."""
import logging
from typing import List, Tuple

from ..core.types import ModelKind
from ..models.dlist import DecisionList
from ..models.forms import LinearForm
from ..models.threshold import LabeledKStat, MpPTF

logger = logging.getLogger(__name__)


def _distinct_forms(m: MpPTF) -> List[Tuple[LinearForm, int]]:
    """(form, output) with every value unique; left residues sit below right ones"""
    scale = 2 * m.terms
    left = [(f.scale(scale).shift(i), 1) for i, f in enumerate(m.left)]
    right = [(f.scale(scale).shift(len(m.left) + j), 0) for j, f in enumerate(m.right)]
    return left + right


def mpptf_to_ldl(m: MpPTF) -> DecisionList:
    """Walk all attainable values upward and ask "L(x) <= v" for each.

    The first query to fire belongs to the form attaining the global
    minimum, so it outputs that form's side. A query at a form's largest
    value always fires and ends the list; trailing 0-outputs are dropped
    since the default is 0.
    """
    queries = sorted(
        (v, idx, f, c, values[-1])
        for idx, (f, c) in enumerate(_distinct_forms(m))
        for values in [f.attainable_values()]
        for v in values
    )
    entries: List[Tuple[LinearForm, int]] = []
    for v, _, f, c, top in queries:
        entries.append((f.negate().shift(v), c))
        if v == top:
            break
    while entries and entries[-1][1] == 0:
        entries.pop()
    logger.debug("mpptf_to_ldl: %d queries considered, %d kept", len(queries), len(entries))
    return DecisionList.build(ModelKind.LDL, m.arity, entries)


def eldl_to_kstat(d: DecisionList) -> LabeledKStat:
    """Each query contributes M*L_i + (i-1) labeled c_i and its negation labeled 0.

    The list is first closed with the always-firing sentinel (0 = 0 -> 0).
    With M = 2s+3 every value lies off the multiples of M except where
    L_i(x) = 0, and the (s+2)-th statistic lands on the primary of the first
    firing query.
    """
    if not d.exact:
        raise ValueError(f"eldl_to_kstat expects an exact decision list, got {d.model}")
    sentinel = (LinearForm.constant(d.arity, 0), 0)
    queries = [(e.form, e.output) for e in d.entries] + [sentinel]
    s = len(d.entries)
    big_m = 2 * s + 3
    forms: List[LinearForm] = []
    labels: List[int] = []
    for i, (form, c) in enumerate(queries):
        primary = form.scale(big_m).shift(i)
        forms += [primary, primary.negate()]
        labels += [c, 0]
    logger.debug("eldl_to_kstat: %d queries, M=%d, k=%d", s + 1, big_m, s + 2)
    return LabeledKStat(arity=d.arity, forms=tuple(forms), labels=tuple(labels), k=s + 2)


__all__ = ['mpptf_to_ldl', 'eldl_to_kstat']
