import logging
from typing import Any, Iterator, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import ConfigDict, field_serializer, field_validator, model_validator
from typing_extensions import Self

from ..core.base import BaseRepresentation
from ..core.config import MAX_ARITY
from ..core.errors import ArityError
from ..core.types import Output
from .families import FamilySpec, family_table

logger = logging.getLogger(__name__)


def index_of(x: Sequence[int]) -> int:
    """Table index sum x_i 2^(i-1), x_1 least significant"""
    idx = 0
    for i, b in enumerate(x):
        if b:
            idx |= 1 << i
    return idx


def point(idx: int, n: int) -> Tuple[int, ...]:
    return tuple((idx >> i) & 1 for i in range(n))


def all_inputs(n: int) -> Iterator[Tuple[int, ...]]:
    """Every point of {0,1}^n in table-index order"""
    for idx in range(1 << n):
        yield point(idx, n)


def to_hex(table: np.ndarray, n: int) -> str:
    """n=<arity>:<hex>, nibble j holds bits 4j..4j+3, lowest nibble first"""
    bits = np.asarray(table, dtype=np.uint8)
    pad = (-len(bits)) % 4
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    nibbles = bits.reshape(-1, 4) @ np.array([1, 2, 4, 8], dtype=np.uint8)
    return f"n={n}:" + "".join("0123456789abcdef"[int(v)] for v in nibbles)


def from_hex(text: str) -> Tuple[int, np.ndarray]:
    head, sep, body = text.strip().partition(":")
    if not sep or not head.startswith("n="):
        raise ValueError(f"truth table must look like n=<arity>:<hex>, got {text!r}")
    n = int(head[2:])
    if n < 0 or n > MAX_ARITY:
        raise ArityError(f"arity {n} outside [0, {MAX_ARITY}]")
    size = 1 << n
    if len(body) != (size + 3) // 4:
        raise ValueError(f"expected {(size + 3) // 4} hex digits for n={n}, got {len(body)}")
    try:
        nibbles = np.array([int(c, 16) for c in body.lower()], dtype=np.uint8)
    except ValueError as e:
        raise ValueError(f"bad hex digit in {text!r}") from e
    bits = ((nibbles[:, None] >> np.arange(4, dtype=np.uint8)) & 1).reshape(-1)
    if bits[size:].any():
        raise ValueError("nonzero padding bits past 2^n")
    return n, bits[:size].astype(bool)


class BoolFn(BaseRepresentation):
    """A Boolean function: materialised table up to the cap, family above it"""
    model: Literal["boolfn"] = "boolfn"
    arity: int
    table: Optional[np.ndarray] = None
    family: Optional[FamilySpec] = None

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="before")
    @classmethod
    def _parse_hex(cls, data: Any) -> Any:
        if isinstance(data, dict) and isinstance(data.get("table"), str):
            n, bits = from_hex(data["table"])
            data = {**data, "table": bits}
            data.setdefault("arity", n)
            if data["arity"] != n:
                raise ValueError(f"arity {data['arity']} disagrees with table prefix n={n}")
        return data

    @model_validator(mode="after")
    def _check_table(self) -> "BoolFn":
        if self.arity < 0:
            raise ValueError("arity must be nonnegative")
        if self.table is None:
            if self.family is None:
                raise ValueError("a BoolFn needs a table or a family")
            if self.family.arity != self.arity:
                raise ValueError("family arity disagrees with arity")
            return self
        if self.arity > MAX_ARITY:
            raise ValueError(f"arity {self.arity} exceeds the table cap {MAX_ARITY}")
        if self.table.ndim != 1 or len(self.table) != 1 << self.arity:
            raise ValueError(f"table length must be 2^{self.arity}, got {self.table.size}")
        return self

    @field_validator("table", mode="before")
    @classmethod
    def _as_bool_array(cls, v: Any) -> Any:
        if v is None:
            return v
        table = np.array(v, dtype=bool)
        table.flags.writeable = False
        return table

    @field_serializer("table")
    def _dump_table(self, table: Optional[np.ndarray]) -> Optional[str]:
        return None if table is None else to_hex(table, self.arity)

    @property
    def materialized(self) -> bool:
        return self.table is not None

    def evaluate(self, x: Sequence[int]) -> Output:
        bits = self.check_input(x)
        if self.table is not None:
            return Output(int(self.table[index_of(bits)]))
        assert self.family is not None
        return Output(self.family.evaluate(bits))

    def to_hex(self) -> str:
        return to_hex(self.require_table(), self.arity)

    @classmethod
    def parse_hex(cls, text: str) -> Self:
        n, bits = from_hex(text)
        return cls(arity=n, table=bits)

    def require_table(self) -> np.ndarray:
        if self.table is None:
            raise ArityError(f"arity {self.arity} is above the table cap; only pointwise evaluation")
        return self.table

    def ones(self) -> int:
        return int(np.count_nonzero(self.require_table()))

    def complement(self) -> "BoolFn":
        return BoolFn(arity=self.arity, table=~self.require_table())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoolFn):
            return NotImplemented
        if self.arity != other.arity:
            return False
        if self.table is not None and other.table is not None:
            return bool(np.array_equal(self.table, other.table))
        return self.table is None and other.table is None and self.family == other.family

    __hash__ = None  # type: ignore[assignment]


def from_truth_table(bits: Sequence[int], n: int) -> BoolFn:
    """BoolFn from a 0/1 sequence in table-index order"""
    if n < 0 or n > MAX_ARITY:
        raise ArityError(f"arity {n} outside [0, {MAX_ARITY}]")
    table = np.asarray(bits, dtype=np.uint8)
    if table.ndim != 1 or len(table) != 1 << n:
        raise ArityError(f"table length must be 2^{n} = {1 << n}, got {len(table)}")
    if ((table != 0) & (table != 1)).any():
        raise ValueError("table entries must be 0 or 1")
    return BoolFn(arity=n, table=table.astype(bool))


def from_callable(f: Any, n: int) -> BoolFn:
    """Materialise any pointwise evaluator"""
    if n > MAX_ARITY:
        raise ArityError(f"arity {n} exceeds the table cap {MAX_ARITY}")
    table = np.fromiter((int(f(x)) == 1 for x in all_inputs(n)), dtype=bool, count=1 << n)
    return BoolFn(arity=n, table=table)


def family(spec: FamilySpec, max_arity: int = MAX_ARITY) -> BoolFn:
    """Materialise a family, or keep it pointwise above the cap"""
    if spec.arity > max_arity:
        logger.info("%s%s has arity %d above the cap; evaluating pointwise", spec.name.value, spec.params, spec.arity)
        return BoolFn(arity=spec.arity, family=spec)
    return BoolFn(arity=spec.arity, table=family_table(spec))


__all__ = [
    'BoolFn',
    'from_truth_table',
    'from_callable',
    'family',
    'index_of',
    'point',
    'all_inputs',
    'to_hex',
    'from_hex',
]
