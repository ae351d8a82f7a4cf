"""Named parametric Boolean function families.

Each family has a vectorised table builder (used up to the arity cap) and
a pointwise evaluator (used above it). Variable layout for two-argument
families is x_1..x_n followed by y_1..y_n.
"""
from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ..core.errors import ArityError
from ..core.types import FamilyName


class FamilySpec(BaseModel):
    """A family name with its integer parameters"""
    name: FamilyName
    params: Tuple[int, ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_params(self) -> "FamilySpec":
        p = self.params
        if self.name == FamilyName.EXACT_HALF_CNF:
            if len(p) != 2:
                raise ValueError("EXACT_HALF_CNF takes (n, k)")
            n, k = p
            if k <= 0 or k % 2 or n % k:
                raise ValueError(f"EXACT_HALF_CNF needs k even and k | n, got n={n}, k={k}")
        elif self.name == FamilyName.AND_OR_AND:
            if len(p) != 2 or p[0] < 1 or p[1] < 1:
                raise ValueError("AND_OR_AND takes (n, w) with n, w >= 1")
        else:
            if len(p) != 1:
                raise ValueError(f"{self.name.value} takes a single size parameter")
        if p[0] < 0:
            raise ValueError("size parameter must be nonnegative")
        if self.name in (FamilyName.IP, FamilyName.DISJ, FamilyName.OMB_AND2) and p[0] < 1:
            raise ValueError(f"{self.name.value} needs n >= 1")
        return self

    @classmethod
    def parse(cls, name: str, *params: int) -> "FamilySpec":
        key = name.upper().replace("-", "_")
        return cls(name=FamilyName(key), params=tuple(int(v) for v in params))

    @property
    def arity(self) -> int:
        n = self.params[0]
        if self.name in (FamilyName.IP, FamilyName.DISJ, FamilyName.OMB_AND2):
            return 2 * n
        if self.name == FamilyName.AND_OR_AND:
            return 2 * n * self.params[1]
        return n

    def evaluate(self, x: Sequence[int]) -> int:
        """Pointwise value straight from the definition"""
        if len(x) != self.arity:
            raise ArityError(f"{self.name.value} has arity {self.arity}, got {len(x)}")
        bits = [int(b) for b in x]
        n = self.params[0]
        name = self.name
        if name == FamilyName.MAJ:
            return int(2 * sum(bits) >= n)
        if name == FamilyName.XOR:
            return sum(bits) % 2
        if name == FamilyName.IP:
            return sum(bits[i] & bits[n + i] for i in range(n)) % 2
        if name == FamilyName.DISJ:
            return int(not any(bits[i] & bits[n + i] for i in range(n)))
        if name == FamilyName.OMB:
            return _omb(bits)
        if name == FamilyName.OMB_AND2:
            return _omb([bits[i] & bits[n + i] for i in range(n)])
        if name == FamilyName.EXACT_HALF_CNF:
            k = self.params[1]
            return int(all(sum(bits[j:j + k]) == k // 2 for j in range(0, n, k)))
        w = self.params[1]
        half = n * w
        return int(all(
            any(bits[i * w + j] & bits[half + i * w + j] for j in range(w))
            for i in range(n)
        ))


def _omb(bits: Sequence[int]) -> int:
    """Parity of the largest 1-based index set to 1, 0 on the all-zero input"""
    top = 0
    for i, b in enumerate(bits):
        if b:
            top = i + 1
    return top % 2


def _column(idx: np.ndarray, i: int) -> np.ndarray:
    return ((idx >> np.uint32(i)) & np.uint32(1)).astype(np.uint8)


def family_table(spec: FamilySpec) -> np.ndarray:
    """Vectorised truth table, bit at index sum x_i 2^(i-1)"""
    arity = spec.arity
    idx = np.arange(1 << arity, dtype=np.uint32)
    n = spec.params[0]
    name = spec.name
    if name in (FamilyName.MAJ, FamilyName.XOR):
        weight = np.zeros(idx.shape, dtype=np.uint8)
        for i in range(arity):
            weight += _column(idx, i)
        if name == FamilyName.MAJ:
            return 2 * weight.astype(np.int32) >= n
        return (weight & 1).astype(bool)
    if name in (FamilyName.IP, FamilyName.DISJ, FamilyName.OMB_AND2):
        pairs = [_column(idx, i) & _column(idx, n + i) for i in range(n)]
        if name == FamilyName.IP:
            acc = np.zeros(idx.shape, dtype=np.uint8)
            for col in pairs:
                acc ^= col
            return acc.astype(bool)
        if name == FamilyName.DISJ:
            hit = np.zeros(idx.shape, dtype=np.uint8)
            for col in pairs:
                hit |= col
            return hit == 0
        return _omb_columns(pairs, idx.shape)
    if name == FamilyName.OMB:
        return _omb_columns([_column(idx, i) for i in range(n)], idx.shape)
    if name == FamilyName.EXACT_HALF_CNF:
        k = spec.params[1]
        ok = np.ones(idx.shape, dtype=bool)
        for start in range(0, n, k):
            block = np.zeros(idx.shape, dtype=np.uint8)
            for i in range(start, start + k):
                block += _column(idx, i)
            ok &= block == k // 2
        return ok
    w = spec.params[1]
    half = n * w
    result = np.ones(idx.shape, dtype=bool)
    for i in range(n):
        clause = np.zeros(idx.shape, dtype=np.uint8)
        for j in range(w):
            clause |= _column(idx, i * w + j) & _column(idx, half + i * w + j)
        result &= clause.astype(bool)
    return result


def _omb_columns(cols: Sequence[np.ndarray], shape: Tuple[int, ...]) -> np.ndarray:
    top = np.zeros(shape, dtype=np.uint8)
    for i, col in enumerate(cols):
        top = np.where(col.astype(bool), np.uint8((i + 1) % 2), top)
    return top.astype(bool)


__all__ = ['FamilySpec', 'family_table']
