"""Linear-form inequality representations: mpPTF, kSTAT and labeled kSTAT."""
from typing import List, Literal, Sequence, Tuple

from pydantic import field_validator, model_validator

from ..core.base import BaseRepresentation
from ..core.types import Output
from .forms import LinearForm


def _check_forms(forms: Sequence[LinearForm], arity: int, side: str) -> None:
    for f in forms:
        if f.arity != arity:
            raise ValueError(f"{side} form has arity {f.arity}, expected {arity}")
        if not f.is_integer:
            raise ValueError(f"{side} form {f} is not integral")


def order_statistic(values: Sequence[int], k: int) -> int:
    """k-th smallest, 1-based"""
    return sorted(values)[k - 1]


class MpPTF(BaseRepresentation):
    """min_i L_i(x) <= min_j R_j(x)"""
    model: Literal["mpptf"] = "mpptf"
    arity: int
    left: Tuple[LinearForm, ...]
    right: Tuple[LinearForm, ...]

    @model_validator(mode="after")
    def _check(self) -> "MpPTF":
        if not self.left or not self.right:
            raise ValueError("an mpPTF needs at least one form per side")
        _check_forms(self.left, self.arity, "left")
        _check_forms(self.right, self.arity, "right")
        return self

    @property
    def terms(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def max_weight(self) -> int:
        return max(f.max_weight for f in (*self.left, *self.right))

    def evaluate(self, x: Sequence[int]) -> Output:
        return eval_mpptf(self, x)


class KStat(BaseRepresentation):
    """k_l-th statistic of the left forms < k_r-th statistic of the right forms"""
    model: Literal["kstat"] = "kstat"
    arity: int
    left: Tuple[LinearForm, ...]
    right: Tuple[LinearForm, ...]
    k_left: int
    k_right: int

    @model_validator(mode="after")
    def _check(self) -> "KStat":
        _check_forms(self.left, self.arity, "left")
        _check_forms(self.right, self.arity, "right")
        if not 1 <= self.k_left <= len(self.left):
            raise ValueError(f"k_left={self.k_left} outside [1, {len(self.left)}]")
        if not 1 <= self.k_right <= len(self.right):
            raise ValueError(f"k_right={self.k_right} outside [1, {len(self.right)}]")
        return self

    @property
    def forms(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def max_weight(self) -> int:
        return max(f.max_weight for f in (*self.left, *self.right))

    def evaluate(self, x: Sequence[int]) -> Output:
        return eval_kstat(self, x)


class LabeledKStat(BaseRepresentation):
    """Label of the k-th statistic, with ties resolved toward label 1"""
    model: Literal["labeled_kstat"] = "labeled_kstat"
    arity: int
    forms: Tuple[LinearForm, ...]
    labels: Tuple[int, ...]
    k: int

    @field_validator("labels")
    @classmethod
    def _bits(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(b not in (0, 1) for b in v):
            raise ValueError("labels must be 0 or 1")
        return v

    @model_validator(mode="after")
    def _check(self) -> "LabeledKStat":
        _check_forms(self.forms, self.arity, "labeled")
        if len(self.labels) != len(self.forms):
            raise ValueError("one label per form")
        if not 1 <= self.k <= len(self.forms):
            raise ValueError(f"k={self.k} outside [1, {len(self.forms)}]")
        return self

    @property
    def max_weight(self) -> int:
        return max(f.max_weight for f in self.forms)

    def evaluate(self, x: Sequence[int]) -> Output:
        return eval_labeled_kstat(self, x)


def eval_mpptf(m: MpPTF, x: Sequence[int]) -> Output:
    bits = m.check_input(x)
    left = min(f.int_value(bits) for f in m.left)
    right = min(f.int_value(bits) for f in m.right)
    return Output(int(left <= right))


def eval_kstat(s: KStat, x: Sequence[int]) -> Output:
    bits = s.check_input(x)
    left = order_statistic([f.int_value(bits) for f in s.left], s.k_left)
    right = order_statistic([f.int_value(bits) for f in s.right], s.k_right)
    return Output(int(left < right))


def eval_labeled_kstat(s: LabeledKStat, x: Sequence[int]) -> Output:
    bits = s.check_input(x)
    values: List[int] = [f.int_value(bits) for f in s.forms]
    pivot = order_statistic(values, s.k)
    return Output(int(any(v == pivot and lab for v, lab in zip(values, s.labels))))


__all__ = [
    'MpPTF',
    'KStat',
    'LabeledKStat',
    'eval_mpptf',
    'eval_kstat',
    'eval_labeled_kstat',
    'order_statistic',
]
