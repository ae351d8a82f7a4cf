from typing import List

from ..core.types import Comparison
from ..models.circuit import Gate, ThresholdCircuit
from .templates import EDGE, GATE_NODE, GRAPH, INPUT_NODE


def _wire_name(c: ThresholdCircuit, wire: int) -> str:
    return f"x{wire + 1}" if wire < c.arity else f"g{wire - c.arity}"


def gate_label(gate: Gate) -> str:
    op = "=" if gate.comparison == Comparison.EQ else ">="
    return f"{gate.kind} {op} {gate.threshold}"


def circuit_to_dot(c: ThresholdCircuit, name: str = "circuit") -> str:
    """DOT digraph: inputs at the bottom, edges labeled with weights, output doubled"""
    lines: List[str] = [INPUT_NODE.format(index=i + 1) for i in range(c.arity)]
    for g, gate in enumerate(c.gates):
        shape = "doublecircle" if g == c.output else "circle"
        lines.append(GATE_NODE.format(index=g, shape=shape, label=gate_label(gate)))
    for g, gate in enumerate(c.gates):
        for wire, weight in zip(gate.inputs, gate.weights):
            lines.append(EDGE.format(tail=_wire_name(c, wire), head=f"g{g}", weight=weight))
    return GRAPH.format(name=name, body="\n".join(lines))


__all__ = ['circuit_to_dot', 'gate_label']
