from typing import Dict, Optional, Tuple

from ..core.base import BaseRepresentation
from .circuit import ThresholdCircuit
from .dlist import DecisionList
from .nn import AnchorRepresentation, KNNRep, bit_complexity
from .symmetric import SymAndCircuit, SymMajCircuit
from .threshold import KStat, LabeledKStat, MpPTF


def measure(obj: BaseRepresentation) -> Tuple[Dict[str, int], int, Optional[int]]:
    """Size metrics, max weight and ambient dimension read off a representation"""
    if isinstance(obj, AnchorRepresentation):
        metrics = {
            "anchors": obj.anchor_count,
            "positive": len(obj.positive),
            "negative": len(obj.negative),
            "bit_complexity": bit_complexity(obj),
        }
        if isinstance(obj, KNNRep):
            metrics["k"] = obj.k
        weight = max(f.max_weight for f in (*obj.positive_forms, *obj.negative_forms))
        return metrics, weight, obj.dimension
    if isinstance(obj, MpPTF):
        return {"terms": obj.terms, "left": len(obj.left), "right": len(obj.right)}, obj.max_weight, None
    if isinstance(obj, KStat):
        metrics = {
            "forms": obj.forms,
            "left": len(obj.left),
            "right": len(obj.right),
            "k_left": obj.k_left,
            "k_right": obj.k_right,
        }
        return metrics, obj.max_weight, None
    if isinstance(obj, LabeledKStat):
        return {"forms": len(obj.forms), "k": obj.k}, obj.max_weight, None
    if isinstance(obj, DecisionList):
        return {"length": obj.length}, obj.max_weight, None
    if isinstance(obj, ThresholdCircuit):
        metrics = {
            "gates": obj.size,
            "depth": obj.depth,
            "first_layer": obj.first_layer_size(),
        }
        return metrics, obj.max_weight, None
    if isinstance(obj, SymMajCircuit):
        return {"gates": len(obj.gates)}, obj.max_weight, None
    if isinstance(obj, SymAndCircuit):
        return {"clauses": len(obj.clauses), "fan_in": max(len(c) for c in obj.clauses)}, 1, None
    raise TypeError(f"cannot measure {type(obj).__name__}")


__all__ = ['measure']
