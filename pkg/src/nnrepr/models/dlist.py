from typing import Literal, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.base import BaseRepresentation
from ..core.types import ModelKind, Output
from .forms import LinearForm


class DecisionEntry(BaseModel):
    """One query of a decision list and the bit it outputs when it fires"""
    form: LinearForm
    output: int

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def _check(self) -> "DecisionEntry":
        if self.output not in (0, 1):
            raise ValueError("output must be 0 or 1")
        if not self.form.is_integer:
            raise ValueError(f"query {self.form} is not integral")
        return self


class DecisionList(BaseRepresentation):
    """LDL entries fire on form(x) >= 0, ELDL entries on form(x) = 0; default 0"""
    model: Literal["ldl", "eldl"]
    arity: int
    entries: Tuple[DecisionEntry, ...] = ()

    @model_validator(mode="after")
    def _check(self) -> "DecisionList":
        for e in self.entries:
            if e.form.arity != self.arity:
                raise ValueError(f"query {e.form} does not have arity {self.arity}")
        return self

    @classmethod
    def build(cls, kind: ModelKind, arity: int, entries: Sequence[Tuple[LinearForm, int]]) -> "DecisionList":
        return cls(
            model=kind.value,
            arity=arity,
            entries=tuple(DecisionEntry(form=f, output=c) for f, c in entries)
        )

    @property
    def exact(self) -> bool:
        return self.model == "eldl"

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def max_weight(self) -> int:
        return max((e.form.max_weight for e in self.entries), default=0)

    def evaluate(self, x: Sequence[int]) -> Output:
        return eval_dlist(self, x)


def eval_dlist(d: DecisionList, x: Sequence[int]) -> Output:
    """Output of the first firing entry"""
    bits = d.check_input(x)
    for e in d.entries:
        value = e.form.int_value(bits)
        if (value == 0) if d.exact else (value >= 0):
            return Output(e.output)
    return Output.ZERO


__all__ = ['DecisionEntry', 'DecisionList', 'eval_dlist']
