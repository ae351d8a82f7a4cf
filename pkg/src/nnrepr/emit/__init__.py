"""DOT emission for threshold circuits"""

from .dot import circuit_to_dot, gate_label
from .templates import EDGE, GATE_NODE, GRAPH, INPUT_NODE, DotTemplate

__all__ = [
    'circuit_to_dot',
    'gate_label',
    'DotTemplate',
    'GRAPH',
    'INPUT_NODE',
    'GATE_NODE',
    'EDGE',
]
