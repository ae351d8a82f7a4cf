import re
from typing import Callable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..core.errors import ArityError

_TOKEN_RE = re.compile(r"^(x[1-9]\d*|0|1)$")


class Substitution(BaseModel):
    """Input embedding: each target dimension is a source variable or a constant.

    Targets are the serialised tokens "x3" (variable 3, 1-based), "0" and
    "1". Duplicating variables and appending constants is all a closure
    needs, so there is no negation token.
    """
    source_arity: int
    targets: Tuple[str, ...]

    model_config = ConfigDict(frozen=True)

    @field_validator("targets")
    @classmethod
    def _tokens_well_formed(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        for token in v:
            if not _TOKEN_RE.match(token):
                raise ValueError(f"bad embedding token {token!r}")
        return v

    @model_validator(mode="after")
    def _variables_in_range(self) -> "Substitution":
        if self.source_arity < 0:
            raise ValueError("source arity must be nonnegative")
        for token in self.targets:
            if token.startswith("x") and int(token[1:]) > self.source_arity:
                raise ValueError(f"{token} exceeds source arity {self.source_arity}")
        return self

    @classmethod
    def identity(cls, n: int) -> "Substitution":
        return cls(source_arity=n, targets=tuple(f"x{i + 1}" for i in range(n)))

    @classmethod
    def build(cls, n: int, targets: Sequence[Union[int, str]]) -> "Substitution":
        """Targets as 1-based variable ints or the strings "0"/"1" """
        tokens = tuple(t if isinstance(t, str) else f"x{t}" for t in targets)
        return cls(source_arity=n, targets=tokens)

    @property
    def target_arity(self) -> int:
        return len(self.targets)

    @property
    def is_identity(self) -> bool:
        return self.targets == tuple(f"x{i + 1}" for i in range(self.source_arity))

    def resolve(self) -> List[Tuple[Optional[int], int]]:
        """(0-based source index, 0) for variables, (None, bit) for constants"""
        out: List[Tuple[Optional[int], int]] = []
        for token in self.targets:
            if token.startswith("x"):
                out.append((int(token[1:]) - 1, 0))
            else:
                out.append((None, int(token)))
        return out

    def apply(self, x: Sequence[int]) -> Tuple[int, ...]:
        if len(x) != self.source_arity:
            raise ArityError(f"embedding expects {self.source_arity} inputs, got {len(x)}")
        return tuple(x[i] if i is not None else b for i, b in self.resolve())

    def then(self, other: "Substitution") -> "Substitution":
        """Embedding x -> other(self(x))"""
        if other.source_arity != self.target_arity:
            raise ArityError("embeddings do not compose")
        inner = self.targets
        tokens = tuple(t if not t.startswith("x") else inner[int(t[1:]) - 1] for t in other.targets)
        return Substitution(source_arity=self.source_arity, targets=tokens)


def apply_substitution(
    g: Callable[[Sequence[int]], int],
    v: Substitution,
    x: Sequence[int]
) -> int:
    """g(v(x)) for an evaluator g of arity v.target_arity"""
    arity = getattr(g, "arity", None)
    if arity is not None and arity != v.target_arity:
        raise ArityError(f"embedding maps into arity {v.target_arity}, evaluator has {arity}")
    return int(g(v.apply(x)))


__all__ = ['Substitution', 'apply_substitution']
