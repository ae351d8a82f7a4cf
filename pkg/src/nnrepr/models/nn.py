"""Nearest-neighbor and k-nearest-neighbor representations.

Anchors live in the embedded space of dimension ``embedding.target_arity``;
inputs are given in the source arity and pushed through the embedding.
Distances are squared Euclidean and exact. Each anchor's distance as a
function of the source input is an affine form, since x_i^2 = x_i on the
cube; evaluation goes through those forms.
"""
import logging
from fractions import Fraction
from functools import cached_property
from typing import List, Literal, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from ..boolfn.substitution import Substitution
from ..boolfn.truthtable import point
from ..core.base import BaseRepresentation
from ..core.config import MAX_ARITY
from ..core.errors import ArityError
from ..core.parallel import map_ranges
from ..core.types import Output
from .forms import LinearForm
from .rational import Rational, bit_length

logger = logging.getLogger(__name__)

Anchor = Tuple[Rational, ...]


def squared_distance(z: Sequence[int], p: Sequence[Fraction]) -> Fraction:
    """sum (z_d - p_d)^2, computed directly"""
    return sum(((Fraction(a) - b) ** 2 for a, b in zip(z, p)), Fraction(0))


def distance_form(p: Sequence[Fraction], embedding: Substitution) -> LinearForm:
    """Distance to p as an affine form in the source variables"""
    coeffs = [Fraction(0)] * embedding.source_arity
    const = Fraction(0)
    for (i, b), pd in zip(embedding.resolve(), p):
        if i is None:
            const += (b - pd) ** 2
        else:
            coeffs[i] += 1 - 2 * pd
            const += pd * pd
    return LinearForm(coeffs=tuple(coeffs), const=const)


class AnchorRepresentation(BaseRepresentation):
    """Labeled anchor sets P (label 1) and N (label 0) with an input embedding"""
    embedding: Substitution
    positive: Tuple[Anchor, ...]
    negative: Tuple[Anchor, ...]

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def _check_anchors(self) -> "AnchorRepresentation":
        if not self.positive or not self.negative:
            raise ValueError("both P and N must be nonempty")
        dim = self.embedding.target_arity
        for anchor in (*self.positive, *self.negative):
            if len(anchor) != dim:
                raise ValueError(f"anchor {anchor} does not have dimension {dim}")
        if set(self.positive) & set(self.negative):
            raise ValueError("P and N must be disjoint")
        return self

    @property
    def arity(self) -> int:
        return self.embedding.source_arity

    @property
    def dimension(self) -> int:
        return self.embedding.target_arity

    @property
    def anchor_count(self) -> int:
        return len(self.positive) + len(self.negative)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def boolean(self) -> bool:
        return all(c in (0, 1) for a in (*self.positive, *self.negative) for c in a)

    @cached_property
    def positive_forms(self) -> Tuple[LinearForm, ...]:
        return tuple(distance_form(p, self.embedding) for p in self.positive)

    @cached_property
    def negative_forms(self) -> Tuple[LinearForm, ...]:
        return tuple(distance_form(q, self.embedding) for q in self.negative)

    def labeled_distances(self, x: Sequence[int]) -> List[Tuple[Fraction, int]]:
        """(distance, label) for every anchor, P first"""
        bits = self.check_input(x)
        return [(f.evaluate(bits), 1) for f in self.positive_forms] + [
            (f.evaluate(bits), 0) for f in self.negative_forms
        ]


class NNRep(AnchorRepresentation):
    """Nearest-neighbor representation"""
    model: Literal["nn"] = "nn"

    def evaluate(self, x: Sequence[int]) -> Output:
        return eval_nn(self, x)


class KNNRep(AnchorRepresentation):
    """k-nearest-neighbor representation, majority with ties going to 1"""
    model: Literal["knn"] = "knn"
    k: int

    @model_validator(mode="after")
    def _check_k(self) -> "KNNRep":
        if not 1 <= self.k <= self.anchor_count:
            raise ValueError(f"k={self.k} outside [1, {self.anchor_count}]")
        return self

    def evaluate(self, x: Sequence[int]) -> Output:
        return eval_knn(self, x)


def eval_nn(r: AnchorRepresentation, x: Sequence[int]) -> Output:
    """1 if the nearest anchor is strictly positive, 0 if strictly negative"""
    bits = r.check_input(x)
    best_p = min(f.evaluate(bits) for f in r.positive_forms)
    best_n = min(f.evaluate(bits) for f in r.negative_forms)
    if best_p < best_n:
        return Output.ONE
    if best_n < best_p:
        return Output.ZERO
    return Output.UNDEFINED


def eval_knn(r: KNNRep, x: Sequence[int]) -> Output:
    """Majority of the k nearest anchors.

    When the k-th distance t is tied past position k, the k-set is every
    anchor closer than t plus any r anchors at distance t. The result is
    Undefined only if those completions disagree on the majority; for k = 1
    that is exactly the cross-label tie of eval_nn.
    """
    distances = r.labeled_distances(x)
    k = r.k
    t = sorted(d for d, _ in distances)[k - 1]
    inside = [label for d, label in distances if d < t]
    tied = [label for d, label in distances if d == t]
    r_fill = k - len(inside)
    tied_pos = sum(tied)
    least = sum(inside) + max(0, r_fill - (len(tied) - tied_pos))
    most = sum(inside) + min(r_fill, tied_pos)
    low, high = 2 * least >= k, 2 * most >= k
    if low != high:
        return Output.UNDEFINED
    return Output.ONE if low else Output.ZERO


def bit_complexity(r: AnchorRepresentation) -> int:
    """Max over coordinates of numerator bits plus denominator bits"""
    return max(
        (bit_length(c) for a in (*r.positive, *r.negative) for c in a),
        default=2
    )


class WellDefinedReport(BaseModel):
    """Exhaustive scan for inputs where a representation has no strict winner"""
    model: str
    inputs_checked: int
    undefined: Tuple[Tuple[int, ...], ...]

    model_config = ConfigDict(frozen=True)

    @property
    def defined(self) -> bool:
        return not self.undefined


def _undefined_in_range(r: AnchorRepresentation, lo: int, hi: int) -> List[int]:
    n = r.arity
    return [idx for idx in range(lo, hi) if r.evaluate(point(idx, n)) == Output.UNDEFINED]


def well_defined(r: AnchorRepresentation, jobs: int = 1) -> WellDefinedReport:
    """List every input producing Undefined"""
    if r.arity > MAX_ARITY:
        raise ArityError(f"arity {r.arity} exceeds the scan cap {MAX_ARITY}")
    total = 1 << r.arity
    chunks = map_ranges(_undefined_in_range, total, jobs, args=(r,))
    bad = [point(idx, r.arity) for chunk in chunks for idx in chunk]
    if bad:
        logger.warning("%s representation is undefined on %d of %d inputs", r.model, len(bad), total)  # type: ignore[attr-defined]
    return WellDefinedReport(model=getattr(r, "model"), inputs_checked=total, undefined=tuple(bad))


__all__ = [
    'Anchor',
    'AnchorRepresentation',
    'NNRep',
    'KNNRep',
    'WellDefinedReport',
    'squared_distance',
    'distance_form',
    'eval_nn',
    'eval_knn',
    'bit_complexity',
    'well_defined',
]
