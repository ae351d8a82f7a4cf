"""Symmetric functions of threshold gates and of conjunctions.

A SYM∘MAJ circuit outputs top[w] where w counts the gates with L_i(x) > 0;
a SYM∘AND circuit outputs top[w] where w counts the satisfied clauses.
"""
from typing import Literal, Sequence, Tuple

from pydantic import model_validator

from ..core.base import BaseRepresentation
from ..core.types import Output
from .forms import LinearForm


def _check_top(top: Sequence[int], count: int) -> None:
    if len(top) != count + 1:
        raise ValueError(f"top needs {count + 1} entries (one per weight 0..{count}), got {len(top)}")
    if any(b not in (0, 1) for b in top):
        raise ValueError("top entries must be 0 or 1")


class SymMajCircuit(BaseRepresentation):
    """top[#{i : L_i(x) > 0}] over integer gate forms"""
    model: Literal["sym_maj"] = "sym_maj"
    arity: int
    gates: Tuple[LinearForm, ...]
    top: Tuple[int, ...]

    @model_validator(mode="after")
    def _check(self) -> "SymMajCircuit":
        if not self.gates:
            raise ValueError("a SYM∘MAJ circuit needs at least one gate")
        for g in self.gates:
            if g.arity != self.arity or not g.is_integer:
                raise ValueError(f"gate {g} is not an integer form of arity {self.arity}")
        _check_top(self.top, len(self.gates))
        return self

    @property
    def max_weight(self) -> int:
        return max(g.max_weight for g in self.gates)

    def firing(self, x: Sequence[int]) -> int:
        bits = self.check_input(x)
        return sum(1 for g in self.gates if g.int_value(bits) > 0)

    def evaluate(self, x: Sequence[int]) -> Output:
        return Output(self.top[self.firing(x)])


class SymAndCircuit(BaseRepresentation):
    """top[#satisfied clauses]; a literal is +i for x_i and -i for its negation"""
    model: Literal["sym_and"] = "sym_and"
    arity: int
    clauses: Tuple[Tuple[int, ...], ...]
    top: Tuple[int, ...]

    @model_validator(mode="after")
    def _check(self) -> "SymAndCircuit":
        if not self.clauses:
            raise ValueError("a SYM∘AND circuit needs at least one clause")
        for clause in self.clauses:
            if not clause:
                raise ValueError("empty clause")
            variables = [abs(lit) for lit in clause]
            if any(lit == 0 or abs(lit) > self.arity for lit in clause):
                raise ValueError(f"clause {clause} has a literal outside [1, {self.arity}]")
            if len(set(variables)) != len(variables):
                raise ValueError(f"clause {clause} repeats a variable")
        _check_top(self.top, len(self.clauses))
        return self

    def satisfied(self, x: Sequence[int]) -> int:
        bits = self.check_input(x)
        return sum(
            1 for clause in self.clauses
            if all(bool(bits[abs(lit) - 1]) == (lit > 0) for lit in clause)
        )

    def evaluate(self, x: Sequence[int]) -> Output:
        return Output(self.top[self.satisfied(x)])


__all__ = [
    'SymMajCircuit',
    'SymAndCircuit',
]
