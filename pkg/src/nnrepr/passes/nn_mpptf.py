"""Passes between nearest-neighbor representations and min-plus PTFs."""
import logging
from fractions import Fraction
from typing import List, Literal, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from ..boolfn.substitution import Substitution
from ..models.forms import LinearForm, integer_scale
from ..models.nn import AnchorRepresentation, NNRep, squared_distance
from ..models.threshold import KStat, MpPTF
from ..oracle.four_square import four_square

logger = logging.getLogger(__name__)

# (coefficients, constant) of an integer form during block construction
_IntForm = Tuple[List[int], int]


def nn_to_mpptf(r: AnchorRepresentation) -> MpPTF:
    """One distance form per anchor, scaled to integers; P on the left"""
    forms = integer_scale((*r.positive_forms, *r.negative_forms))
    left, right = forms[:len(r.positive)], forms[len(r.positive):]
    logger.debug("nn_to_mpptf: %d left, %d right terms", len(left), len(right))
    return MpPTF(arity=r.arity, left=left, right=right)


def _int_form(f: LinearForm) -> _IntForm:
    return [int(c) for c in f.coeffs], int(f.const)


def block_weight(m: MpPTF) -> int:
    """W = max(|coefficient|, |constant|, 1) over all forms"""
    return max([1] + [abs(int(v)) for f in (*m.left, *m.right) for v in (*f.coeffs, f.const)])


class HnnPlan(BaseModel):
    """Block layout for the Boolean-anchor construction"""
    layout: Literal["doubled", "compact"]
    blocks: Tuple[int, ...]          # t_k: copies of x_k in the embedding
    offset: int                      # shared shift added to every distance
    constant_block: int              # C: constant-1 dimensions
    left: Tuple[Tuple[Tuple[int, ...], int], ...]
    right: Tuple[Tuple[Tuple[int, ...], int], ...]
    bound: int                       # 12nW + 8W
    statement_bound: int             # 4nW + 8W

    model_config = ConfigDict(frozen=True)

    @property
    def dimension(self) -> int:
        return sum(self.blocks) + self.constant_block


def _normalise(m: MpPTF, double_again: bool) -> Tuple[List[_IntForm], List[_IntForm]]:
    """2L vs 2R+1, shift to nonnegative coefficients and constants, optionally x2"""
    left = [([2 * c for c in a], 2 * t) for a, t in map(_int_form, m.left)]
    right = [([2 * c for c in a], 2 * t + 1) for a, t in map(_int_form, m.right)]
    forms = left + right
    for k in range(m.arity):
        low = min(a[k] for a, _ in forms)
        if low < 0:
            for a, _ in forms:
                a[k] -= low
    low = min(t for _, t in forms)
    if low < 0:
        forms = [(a, t - low) for a, t in forms]
    if double_again:
        forms = [([2 * c for c in a], 2 * t) for a, t in forms]
    return forms[:len(left)], forms[len(left):]


def _plan(m: MpPTF, layout: str) -> HnnPlan:
    left, right = _normalise(m, double_again=(layout == "doubled"))
    forms = left + right
    t = [max(a[k] for a, _ in forms) for k in range(m.arity)]
    slack = [sum((tk - ak) // 2 for tk, ak in zip(t, a)) - theta for a, theta in forms]
    offset = max(0, max(slack))
    constant_block = offset + max(theta for _, theta in forms)
    w = block_weight(m)
    n = m.arity
    return HnnPlan(
        layout=layout,  # type: ignore[arg-type]
        blocks=tuple(t),
        offset=offset,
        constant_block=constant_block,
        left=tuple((tuple(a), theta) for a, theta in left),
        right=tuple((tuple(a), theta) for a, theta in right),
        bound=12 * n * w + 8 * w,
        statement_bound=4 * n * w + 8 * w,
    )


def plan_hnn(m: MpPTF) -> HnnPlan:
    """Block layout, falling back to the single-doubling layout if the doubled one overflows"""
    plan = _plan(m, "doubled")
    if plan.dimension > plan.bound:
        logger.debug("doubled layout needs %d > %d dimensions, using compact layout", plan.dimension, plan.bound)
        plan = _plan(m, "compact")
    return plan


def _block_anchor(plan: HnnPlan, coeffs: Sequence[int], theta: int) -> Tuple[int, ...]:
    coords: List[int] = []
    for tk, ak in zip(plan.blocks, coeffs):
        coords += [0] * ((tk + ak) // 2) + [1] * ((tk - ak) // 2)
    z = plan.offset + theta - sum((tk - ak) // 2 for tk, ak in zip(plan.blocks, coeffs))
    coords += [0] * z + [1] * (plan.constant_block - z)
    return tuple(coords)


def mpptf_to_hnn(m: MpPTF) -> NNRep:
    """Boolean anchors whose Hamming distances equal the normalised forms plus a shared offset"""
    plan = plan_hnn(m)
    targets: List[str] = []
    for k, tk in enumerate(plan.blocks):
        targets += [f"x{k + 1}"] * tk
    targets += ["1"] * plan.constant_block
    embedding = Substitution(source_arity=m.arity, targets=tuple(targets))
    positive = tuple(_block_anchor(plan, a, theta) for a, theta in plan.left)
    negative = tuple(_block_anchor(plan, a, theta) for a, theta in plan.right)
    logger.debug(
        "mpptf_to_hnn: %s layout, dimension %d (bound %d), offset %d",
        plan.layout, plan.dimension, plan.bound, plan.offset
    )
    return NNRep(
        embedding=embedding,
        positive=positive,
        negative=negative,
    )


def _rational_anchor(f: LinearForm, offset: Fraction) -> Tuple[Fraction, ...]:
    """Anchor at distance f(x) + offset: (1-a)/2 on variables, four-square constant block"""
    variable = [(1 - a) / 2 for a in f.coeffs]
    residual = f.const + offset - squared_distance((0,) * len(variable), variable)
    return (*variable, *(1 - s for s in four_square(residual)))


def shared_offset(forms: Sequence[LinearForm]) -> Fraction:
    """Smallest nonnegative shift making every four-square residual nonnegative"""
    need = [sum(((1 - a) ** 2 / 4 for a in f.coeffs), Fraction(0)) - f.const for f in forms]
    return max([Fraction(0)] + need)


def realise_anchors(
    arity: int,
    left: Sequence[LinearForm],
    right: Sequence[LinearForm]
) -> Tuple[Substitution, Tuple[Tuple[Fraction, ...], ...], Tuple[Tuple[Fraction, ...], ...]]:
    """Rational anchors in n+4 dimensions whose distances are the forms plus one shared offset"""
    offset = shared_offset((*left, *right))
    embedding = Substitution(
        source_arity=arity,
        targets=tuple(f"x{i + 1}" for i in range(arity)) + ("1",) * 4
    )
    positive = tuple(_rational_anchor(f, offset) for f in left)
    negative = tuple(_rational_anchor(f, offset) for f in right)
    return embedding, positive, negative


def mpptf_to_nn(m: MpPTF) -> NNRep:
    """Rational anchors; right forms are raised by 1/2 so integer ties go left"""
    right = tuple(f.shift(Fraction(1, 2)) for f in m.right)
    embedding, positive, negative = realise_anchors(m.arity, m.left, right)
    return NNRep(embedding=embedding, positive=positive, negative=negative)


def mpptf_to_kstat(m: MpPTF) -> KStat:
    """k_l = k_r = 1; right forms +1 turn <= into <"""
    return KStat(
        arity=m.arity,
        left=m.left,
        right=tuple(f.shift(1) for f in m.right),
        k_left=1,
        k_right=1,
    )


__all__ = [
    'nn_to_mpptf',
    'mpptf_to_hnn',
    'mpptf_to_nn',
    'mpptf_to_kstat',
    'plan_hnn',
    'HnnPlan',
    'block_weight',
    'realise_anchors',
    'shared_offset',
]
