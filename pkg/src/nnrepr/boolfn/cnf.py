import logging
from itertools import combinations
from typing import List, Literal, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.errors import ArityError
from ..core.types import ClauseKind

logger = logging.getLogger(__name__)


class CnfDnf(BaseModel):
    """Two-level formula; a literal is +i for x_i and -i for its negation"""
    model: Literal["cnf"] = "cnf"
    arity: int
    kind: ClauseKind
    clauses: Tuple[Tuple[int, ...], ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_literals(self) -> "CnfDnf":
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > self.arity:
                    raise ValueError(f"literal {lit} outside [1, {self.arity}]")
                if -lit in clause:
                    raise ValueError(f"clause {clause} contains x{abs(lit)} and its negation")
        return self

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def negated(self) -> "CnfDnf":
        """De Morgan dual computing the complement"""
        kind = ClauseKind.DNF if self.kind == ClauseKind.CNF else ClauseKind.CNF
        return CnfDnf(
            arity=self.arity,
            kind=kind,
            clauses=tuple(tuple(-lit for lit in clause) for clause in self.clauses)
        )

    def __call__(self, x: Sequence[int]) -> int:
        return cnf_eval(self, x)

    def dumps(self) -> str:
        return self.model_dump_json(indent=2)


def _literal_true(lit: int, x: Sequence[int]) -> bool:
    value = x[abs(lit) - 1]
    return bool(value) if lit > 0 else not value


def cnf_eval(c: CnfDnf, x: Sequence[int]) -> int:
    """Standard CNF/DNF semantics; the empty CNF is 1, the empty DNF is 0"""
    if len(x) != c.arity:
        raise ArityError(f"formula has arity {c.arity}, input has {len(x)}")
    if c.kind == ClauseKind.CNF:
        return int(all(any(_literal_true(lit, x) for lit in clause) for clause in c.clauses))
    return int(any(all(_literal_true(lit, x) for lit in clause) for clause in c.clauses))


def exact_half_cnf(n: int, k: int) -> CnfDnf:
    """CNF true iff every block of k consecutive variables has weight exactly k/2.

    Per block and per (k/2+1)-subset S: one clause "not all of S are 1"
    and one clause "not all of S are 0".
    """
    if k <= 0 or k % 2 or n % k:
        raise ValueError(f"need k even and k | n, got n={n}, k={k}")
    clauses: List[Tuple[int, ...]] = []
    for start in range(0, n, k):
        block = range(start + 1, start + k + 1)
        for subset in combinations(block, k // 2 + 1):
            clauses.append(tuple(-v for v in subset))
            clauses.append(tuple(subset))
    cnf = CnfDnf(arity=n, kind=ClauseKind.CNF, clauses=tuple(clauses))
    logger.debug("exact_half_cnf(n=%d, k=%d) has %d clauses", n, k, cnf.clause_count)
    return cnf


__all__ = ['CnfDnf', 'cnf_eval', 'exact_half_cnf']
