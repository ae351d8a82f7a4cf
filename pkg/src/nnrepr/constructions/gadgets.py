"""Explicit representations of specific functions and families."""
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..boolfn.cnf import CnfDnf, exact_half_cnf
from ..boolfn.components import components
from ..boolfn.substitution import Substitution
from ..boolfn.truthtable import from_callable
from ..core.errors import RepresentationError
from ..core.types import ClauseKind
from ..models.forms import LinearForm
from ..models.nn import NNRep
from ..models.threshold import MpPTF

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def dnf_clause_anchor(arity: int, clause: Sequence[int]) -> Tuple[Fraction, ...]:
    """Closer than the centre exactly when the conjunction holds.

    First literal at 1 (0 if negated), the others at 3/2 (-1/2 if negated),
    1/2 elsewhere: a satisfying input sits at distance (n-1)/4, any other
    input at least (n-1)/4 + 1, against n/4 for the centre.
    """
    coords = [HALF] * arity
    first, *rest = clause
    coords[abs(first) - 1] = Fraction(1) if first > 0 else Fraction(0)
    for lit in rest:
        coords[abs(lit) - 1] = Fraction(3, 2) if lit > 0 else Fraction(-1, 2)
    return tuple(coords)


def cnf_to_nn(c: CnfDnf) -> NNRep:
    """m + 1 rational anchors: the centre plus one anchor per clause.

    A CNF is negated into a DNF and the labels are swapped back. A formula
    with no clauses is constant; it gets a dummy anchor at -2 in every
    coordinate, farther than the centre from every input.
    """
    if c.arity < 1:
        raise RepresentationError("cnf_to_nn needs at least one variable")
    if any(not clause for clause in c.clauses):
        raise RepresentationError("empty clause")
    dnf = c.negated() if c.kind == ClauseKind.CNF else c
    centre = (HALF,) * c.arity
    if dnf.clauses:
        clause_anchors = tuple(dnf_clause_anchor(c.arity, clause) for clause in dnf.clauses)
    else:
        clause_anchors = ((Fraction(-2),) * c.arity,)
    positive, negative = clause_anchors, (centre,)
    if c.kind == ClauseKind.CNF:
        positive, negative = negative, positive
    logger.debug("cnf_to_nn: %s with %d clauses", c.kind.value, c.clause_count)
    return NNRep(embedding=Substitution.identity(c.arity), positive=positive, negative=negative)


def _unit(dim: int, *ones: int) -> Tuple[int, ...]:
    return tuple(int(d in ones) for d in range(dim))


def disj_hnn(n: int) -> NNRep:
    """3n Boolean anchors: unit vectors are positive, (e_i, e_i) are negative.

    An intersecting pair reaches some (e_i, e_i) at distance |x|+|y|-2,
    below every unit vector; a disjoint one has a unit vector at distance
    |x|+|y|-1 (or 1 on the zero input) and every (e_i, e_i) at >= |x|+|y|.
    """
    if n < 1:
        raise ValueError("n must be positive")
    dim = 2 * n
    positive = tuple(_unit(dim, j) for j in range(dim))
    negative = tuple(_unit(dim, i, n + i) for i in range(n))
    return NNRep(embedding=Substitution.identity(dim), positive=positive, negative=negative)


def xor_mpptf(n: int) -> MpPTF:
    """L_i = i^2 - 2i(x_1 + ... + x_n) for i = 0..n, odd i on the left.

    L_i = (i - w)^2 - w^2 at weight w, so the minimum sits at i = w.
    """
    if n < 1:
        raise ValueError("n must be positive")
    left: List[LinearForm] = []
    right: List[LinearForm] = []
    for i in range(n + 1):
        form = LinearForm.of([-2 * i] * n, i * i)
        (left if i % 2 else right).append(form)
    return MpPTF(arity=n, left=tuple(left), right=tuple(right))


def omb_and2_mpptf(n: int) -> MpPTF:
    """L_k = (k+1)(1 - x_k - y_k); min over odd k <= min(-1, min over even k)"""
    if n < 1:
        raise ValueError("n must be positive")
    left: List[LinearForm] = []
    right: List[LinearForm] = [LinearForm.constant(2 * n, -1)]
    for k in range(1, n + 1):
        coeffs = [0] * (2 * n)
        coeffs[k - 1] = coeffs[n + k - 1] = -(k + 1)
        form = LinearForm.of(coeffs, k + 1)
        (left if k % 2 else right).append(form)
    return MpPTF(arity=2 * n, left=tuple(left), right=tuple(right))


def many_component_cnf(n: int, k: int) -> Tuple[CnfDnf, int]:
    """exact_half_cnf(n, k) with its certified component count C(k, k/2)^(n/k)"""
    cnf = exact_half_cnf(n, k)
    count = components(from_callable(cnf, n))
    logger.info("exact-half CNF n=%d k=%d has %d components", n, k, count)
    return cnf, count


__all__ = [
    'cnf_to_nn',
    'dnf_clause_anchor',
    'disj_hnn',
    'xor_mpptf',
    'omb_and2_mpptf',
    'many_component_cnf',
]
