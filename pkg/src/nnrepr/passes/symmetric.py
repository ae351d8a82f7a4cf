"""Symmetric circuits as a labeled statistic (threshold gates) or as kNN (conjunctions)."""
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..boolfn.substitution import Substitution
from ..core.errors import ConversionError
from ..models.forms import LinearForm
from ..models.nn import KNNRep
from ..models.symmetric import SymAndCircuit, SymMajCircuit
from ..models.threshold import LabeledKStat

logger = logging.getLogger(__name__)


def threshold_gate_form(weights: Sequence[int], theta: int) -> LinearForm:
    """[<w,x> >= theta] as strict positivity of <w,x> - theta + 1"""
    return LinearForm.of(weights, 1 - theta)


def parity_top(s: int) -> Tuple[int, ...]:
    return tuple(w % 2 for w in range(s + 1))


def ip_clauses(n: int) -> SymAndCircuit:
    """Inner product mod 2 on (x, y): clauses x_i AND y_i under parity"""
    if n < 1:
        raise ValueError("n must be positive")
    clauses = tuple((i, n + i) for i in range(1, n + 1))
    return SymAndCircuit(arity=2 * n, clauses=clauses, top=parity_top(n))


def sym_maj_to_kstat(circuit: SymMajCircuit) -> LabeledKStat:
    """Gate forms scaled by s+2 (label 0) plus constants 1..s+1, constant i labeled top(i-1).

    With w firing gates the s-w non-firing values are <= 0 and the firing
    ones are >= s+2, so the (s+1)-th statistic is the constant w+1.
    """
    s = len(circuit.gates)
    forms = [g.scale(s + 2) for g in circuit.gates]
    labels = [0] * s
    for i in range(1, s + 2):
        forms.append(LinearForm.constant(circuit.arity, i))
        labels.append(circuit.top[i - 1])
    return LabeledKStat(arity=circuit.arity, forms=tuple(forms), labels=tuple(labels), k=s + 1)


def clause_anchor(arity: int, clause: Sequence[int], eps: Fraction) -> Tuple[Fraction, ...]:
    """3/2 - eps on positive literals, -1/2 + eps on negated ones, 1/2 elsewhere"""
    coords = [Fraction(1, 2)] * arity
    for lit in clause:
        coords[abs(lit) - 1] = Fraction(3, 2) - eps if lit > 0 else Fraction(-1, 2) + eps
    return tuple(coords)


def _drop(c: int, eps: Fraction) -> Fraction:
    """Distance gained below n/4 by a satisfied clause of fan-in c"""
    return c * (eps - eps * eps)


def sym_and_to_knn(circuit: SymAndCircuit) -> KNNRep:
    """6s+4 rational anchors with k = 2s+1.

    Two anchors per clause (labels 1 and 0) fall below n/4 exactly when the
    clause is satisfied, and rise above n/4 + 1/2 otherwise. Around the
    centre a = (1/2, ..., 1/2), pairs a +/- delta_ij e_1 form a band whose
    lower half, read from the nearest, comes in opposite-label pairs
    (i = s+1 down to 1) followed by the label top(i-1) anchor for j = 1.
    With w satisfied clauses the k nearest are 2w balanced clause anchors,
    s-w balanced band pairs and the single anchor labeled top(w).
    """
    n, s = circuit.arity, len(circuit.clauses)
    centre = [Fraction(1, 2)] * n
    positive: List[Tuple[Fraction, ...]] = []
    negative: List[Tuple[Fraction, ...]] = []

    drops: List[Fraction] = []
    for clause in circuit.clauses:
        c = len(clause)
        for eps, label in ((Fraction(1, 2 * c), 1), (Fraction(1, 4 * c), 0)):
            anchor = clause_anchor(n, clause, eps)
            (positive if label else negative).append(anchor)
            drops.append(_drop(c, eps))

    denominator = 8 * (2 * s + 3)
    for i in range(1, s + 2):
        for j in (0, 1):
            delta = Fraction(2 * i + j, denominator)
            label = circuit.top[i - 1] if j == 1 else 1 - circuit.top[i - 1]
            for sign in (1, -1):
                anchor = tuple([centre[0] + sign * delta] + centre[1:])
                (positive if label else negative).append(anchor)

    delta_max = Fraction(2 * s + 3, denominator)
    band_low = delta_max - delta_max * delta_max
    band_high = delta_max + delta_max * delta_max
    if min(drops) <= band_low:
        raise ConversionError(
            "satisfied clause does not fall below the band",
            inequality=f"min drop {min(drops)} > {band_low}",
        )
    # an unsatisfied literal costs 2 - 2*eps >= 1 on top of the largest drop
    worst = max(drops)
    if 1 - worst <= band_high:
        raise ConversionError(
            "unsatisfied clause does not rise above the band",
            inequality=f"1 - {worst} > {band_high}",
        )

    embedding = Substitution.identity(n)
    logger.debug("sym_and_to_knn: s=%d, %d anchors, k=%d", s, len(positive) + len(negative), 2 * s + 1)
    return KNNRep(
        embedding=embedding,
        positive=tuple(positive),
        negative=tuple(negative),
        k=2 * s + 1,
    )


__all__ = [
    'SymMajCircuit',
    'SymAndCircuit',
    'threshold_gate_form',
    'parity_top',
    'ip_clauses',
    'sym_maj_to_kstat',
    'sym_and_to_knn',
    'clause_anchor',
]
