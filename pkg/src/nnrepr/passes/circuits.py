"""Threshold circuits for Boolean-anchor nearest-neighbor representations.

All gates are first written over the embedded coordinates z, where the
Hamming distance to an anchor a is |a| + <1 - 2a, z>, and then folded back
onto the source variables: weights of duplicated variables add up and
weights on constant dimensions move into the threshold.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.errors import RepresentationError
from ..core.types import CircuitVariant
from ..models.circuit import Gate, ThresholdCircuit, and_gate, or_gate
from ..models.nn import NNRep

logger = logging.getLogger(__name__)

BoolAnchor = Tuple[int, ...]


def _boolean_anchors(r: NNRep) -> Tuple[List[BoolAnchor], List[BoolAnchor]]:
    if not r.boolean:
        raise RepresentationError("circuit constructions need Boolean anchors")
    return (
        [tuple(int(c) for c in p) for p in r.positive],
        [tuple(int(c) for c in q) for q in r.negative],
    )


def _fold(r: NNRep, weights: Sequence[int], threshold: int, kind: str) -> Gate:
    """Gate [<weights, z> >= threshold] over z = embedding(x), as a gate over x"""
    folded = [0] * r.arity
    for (i, bit), w in zip(r.embedding.resolve(), weights):
        if i is None:
            threshold -= w * bit
        else:
            folded[i] += w
    pairs = [(i, w) for i, w in enumerate(folded) if w]
    return Gate(
        inputs=tuple(i for i, _ in pairs),
        weights=tuple(w for _, w in pairs),
        threshold=threshold,
        kind=kind,
    )


def comparator(r: NNRep, p: BoolAnchor, q: BoolAnchor) -> Gate:
    """[dist(z, p) < dist(z, q)] as <2p - 2q, z> >= |p| - |q| + 1"""
    weights = [2 * a - 2 * b for a, b in zip(p, q)]
    return _fold(r, weights, sum(p) - sum(q) + 1, "maj")


def at_most(r: NNRep, a: BoolAnchor, i: int) -> Gate:
    """[dist(z, a) <= i]"""
    return _fold(r, [2 * c - 1 for c in a], sum(a) - i, "maj")


def at_least(r: NNRep, a: BoolAnchor, i: int) -> Gate:
    """[dist(z, a) >= i]"""
    return _fold(r, [1 - 2 * c for c in a], i - sum(a), "maj")


def depth3_size(positive: int, negative: int, variant: CircuitVariant) -> int:
    outer = positive if variant == CircuitVariant.OR_AND else negative
    return positive * negative + outer + 1


def hnn_to_depth3(r: NNRep, variant: Optional[CircuitVariant] = None) -> ThresholdCircuit:
    """Pairwise comparators under OR∘AND or AND∘OR.

    OR over p of (AND over q of [p closer than q]), or AND over q of (OR
    over p of [p closer than q]); both equal the NN rule on well-defined
    inputs. Without a variant the smaller of the two is built.
    """
    positive, negative = _boolean_anchors(r)
    if variant is None:
        variant = CircuitVariant.OR_AND if len(positive) <= len(negative) else CircuitVariant.AND_OR
    if variant not in (CircuitVariant.OR_AND, CircuitVariant.AND_OR):
        raise ValueError(f"depth-3 construction has no variant {variant.value}")
    n = r.arity
    gates: List[Gate] = []
    wire: Dict[Tuple[int, int], int] = {}
    for a, p in enumerate(positive):
        for b, q in enumerate(negative):
            wire[a, b] = n + len(gates)
            gates.append(comparator(r, p, q))
    middle: List[int] = []
    if variant == CircuitVariant.OR_AND:
        for a in range(len(positive)):
            middle.append(n + len(gates))
            gates.append(and_gate([wire[a, b] for b in range(len(negative))]))
        gates.append(or_gate(middle))
    else:
        for b in range(len(negative)):
            middle.append(n + len(gates))
            gates.append(or_gate([wire[a, b] for a in range(len(positive))]))
        gates.append(and_gate(middle))
    logger.debug("hnn_to_depth3: %s, %d gates", variant.value, len(gates))
    return ThresholdCircuit(
        arity=n,
        gates=tuple(gates),
        output=len(gates) - 1,
        notes={"construction": variant.value},
    )


def hnn_to_depth3_slice(r: NNRep) -> ThresholdCircuit:
    """OR over distance levels i and p in P of ([dist(p) <= i] AND every [dist(q) >= i])"""
    positive, negative = _boolean_anchors(r)
    n, dim = r.arity, r.dimension
    gates: List[Gate] = []
    below: Dict[Tuple[int, int], int] = {}
    above: Dict[Tuple[int, int], int] = {}
    for i in range(dim + 1):
        for a, p in enumerate(positive):
            below[a, i] = n + len(gates)
            gates.append(at_most(r, p, i))
        for b, q in enumerate(negative):
            above[b, i] = n + len(gates)
            gates.append(at_least(r, q, i))
    terms: List[int] = []
    for i in range(dim + 1):
        for a in range(len(positive)):
            terms.append(n + len(gates))
            gates.append(and_gate([below[a, i]] + [above[b, i] for b in range(len(negative))]))
    gates.append(or_gate(terms))
    logger.debug("hnn_to_depth3_slice: dimension %d, %d gates", dim, len(gates))
    return ThresholdCircuit(
        arity=n,
        gates=tuple(gates),
        output=len(gates) - 1,
        notes={"construction": CircuitVariant.SLICE.value},
    )


def hnn_to_depth2(r: NNRep) -> ThresholdCircuit:
    """One threshold gate over the level indicators [dist(a) = i].

    [dist = 0] and [dist = dim] are single gates; every other level is
    [dist <= i] + [dist >= i] - 1. Level i of a positive anchor weighs
    m^(3(dim-i)+1) and of a negative one -m^(3(dim-i)), so the nearest
    level decides the sign of the sum.
    """
    positive, negative = _boolean_anchors(r)
    n, dim = r.arity, r.dimension
    m = len(positive) + len(negative)
    gates: List[Gate] = []
    inputs: List[int] = []
    weights: List[int] = []
    threshold = 0

    def add(gate: Gate, weight: int) -> None:
        inputs.append(n + len(gates))
        weights.append(weight)
        gates.append(gate)

    for anchors, sign, extra in ((positive, 1, 1), (negative, -1, 0)):
        for a in anchors:
            for i in range(dim + 1):
                weight = sign * m ** (3 * (dim - i) + extra)
                if i == 0:
                    add(at_most(r, a, 0), weight)
                elif i == dim:
                    add(at_least(r, a, dim), weight)
                else:
                    add(at_most(r, a, i), weight)
                    add(at_least(r, a, i), weight)
                    threshold += weight
    gates.append(Gate(inputs=tuple(inputs), weights=tuple(weights), threshold=threshold, kind="thr"))
    logger.debug("hnn_to_depth2: %d first-level gates, top weight %d", len(gates) - 1, max(map(abs, weights)))
    return ThresholdCircuit(
        arity=n,
        gates=tuple(gates),
        output=len(gates) - 1,
        notes={"construction": CircuitVariant.DEPTH2.value},
    )


def hnn_to_circuit(r: NNRep, variant: Optional[CircuitVariant] = None) -> ThresholdCircuit:
    """Dispatch on the circuit variant"""
    if variant == CircuitVariant.SLICE:
        return hnn_to_depth3_slice(r)
    if variant == CircuitVariant.DEPTH2:
        return hnn_to_depth2(r)
    return hnn_to_depth3(r, variant)


__all__ = [
    'comparator',
    'at_most',
    'at_least',
    'depth3_size',
    'hnn_to_depth3',
    'hnn_to_depth3_slice',
    'hnn_to_depth2',
    'hnn_to_circuit',
]
