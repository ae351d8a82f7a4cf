"""Layered integer-weight threshold circuits.

Wires 0..n-1 carry the inputs x_1..x_n and wire n+g carries gate g, so a
gate may only read inputs and earlier gates. Size counts gates, not inputs.
"""
from typing import Dict, List, Literal, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.base import BaseRepresentation
from ..core.types import Comparison, Output


class Gate(BaseModel):
    """sum_j weights[j] * wire[inputs[j]] (>= or =) threshold"""
    inputs: Tuple[int, ...]
    weights: Tuple[int, ...]
    threshold: int
    comparison: Comparison = Comparison.GE
    kind: str = "thr"

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check(self) -> "Gate":
        if len(self.inputs) != len(self.weights):
            raise ValueError("one weight per gate input")
        if len(set(self.inputs)) != len(self.inputs):
            raise ValueError("gate reads a wire twice")
        return self

    def fire(self, wires: Sequence[int]) -> int:
        total = sum(w * wires[i] for i, w in zip(self.inputs, self.weights))
        if self.comparison == Comparison.EQ:
            return int(total == self.threshold)
        return int(total >= self.threshold)


def and_gate(inputs: Sequence[int]) -> Gate:
    return Gate(inputs=tuple(inputs), weights=(1,) * len(inputs), threshold=len(inputs), kind="and")


def or_gate(inputs: Sequence[int]) -> Gate:
    return Gate(inputs=tuple(inputs), weights=(1,) * len(inputs), threshold=1, kind="or")


class ThresholdCircuit(BaseRepresentation):
    model: Literal["circuit"] = "circuit"
    arity: int
    gates: Tuple[Gate, ...]
    output: int
    notes: Dict[str, str] = {}

    @model_validator(mode="after")
    def _check(self) -> "ThresholdCircuit":
        for g, gate in enumerate(self.gates):
            for wire in gate.inputs:
                if wire < 0 or wire >= self.arity + g:
                    raise ValueError(f"gate {g} reads wire {wire}, which is not an input or earlier gate")
        if not 0 <= self.output < len(self.gates):
            raise ValueError(f"output gate {self.output} does not exist")
        return self

    @property
    def size(self) -> int:
        return len(self.gates)

    @property
    def layers(self) -> List[int]:
        """Layer of every gate; inputs sit on layer 0"""
        depth: List[int] = []
        for gate in self.gates:
            depth.append(1 + max(
                (depth[w - self.arity] if w >= self.arity else 0 for w in gate.inputs),
                default=0
            ))
        return depth

    @property
    def depth(self) -> int:
        return self.layers[self.output]

    @property
    def max_weight(self) -> int:
        return max((abs(w) for g in self.gates for w in g.weights), default=0)

    def first_layer_size(self) -> int:
        return sum(1 for d in self.layers if d == 1)

    def evaluate(self, x: Sequence[int]) -> Output:
        return eval_circuit(self, x)


def eval_circuit(c: ThresholdCircuit, x: Sequence[int]) -> Output:
    """Topological evaluation; gates are stored in topological order"""
    wires = list(c.check_input(x))
    for gate in c.gates:
        wires.append(gate.fire(wires))
    return Output(wires[c.arity + c.output])


__all__ = [
    'Gate',
    'ThresholdCircuit',
    'and_gate',
    'or_gate',
    'eval_circuit',
]
