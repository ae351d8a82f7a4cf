import random
from fractions import Fraction
from typing import Callable, List

import pytest

from nnrepr.boolfn.substitution import Substitution
from nnrepr.core.types import ModelKind
from nnrepr.models.dlist import DecisionList
from nnrepr.models.forms import LinearForm
from nnrepr.models.nn import KNNRep, well_defined
from nnrepr.models.threshold import KStat, LabeledKStat, MpPTF

SEED = 20240611


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


def _form(rng: random.Random, n: int, w: int) -> LinearForm:
    return LinearForm.of([rng.randint(-w, w) for _ in range(n)], rng.randint(-w, w))


def _forms(rng: random.Random, n: int, count: int, w: int) -> List[LinearForm]:
    return [_form(rng, n, w) for _ in range(count)]


@pytest.fixture
def random_form() -> Callable[..., LinearForm]:
    return _form


@pytest.fixture
def random_mpptf() -> Callable[..., MpPTF]:
    """Integer mpPTF with n <= max_n, |weights| <= w and at most six terms"""
    def make(rng: random.Random, max_n: int = 4, w: int = 4) -> MpPTF:
        n = rng.randint(1, max_n)
        left = rng.randint(1, 3)
        right = rng.randint(1, 6 - left)
        return MpPTF(arity=n, left=tuple(_forms(rng, n, left, w)), right=tuple(_forms(rng, n, right, w)))
    return make


@pytest.fixture
def random_kstat() -> Callable[..., KStat]:
    def make(rng: random.Random, max_n: int = 3, w: int = 3) -> KStat:
        n = rng.randint(1, max_n)
        left = _forms(rng, n, rng.randint(1, 3), w)
        right = _forms(rng, n, rng.randint(1, 3), w)
        return KStat(
            arity=n,
            left=tuple(left),
            right=tuple(right),
            k_left=rng.randint(1, len(left)),
            k_right=rng.randint(1, len(right)),
        )
    return make


@pytest.fixture
def random_labeled() -> Callable[..., LabeledKStat]:
    def make(rng: random.Random, max_n: int = 3, w: int = 2) -> LabeledKStat:
        n = rng.randint(1, max_n)
        count = rng.randint(1, 5)
        return LabeledKStat(
            arity=n,
            forms=tuple(_forms(rng, n, count, w)),
            labels=tuple(rng.randint(0, 1) for _ in range(count)),
            k=rng.randint(1, count),
        )
    return make


@pytest.fixture
def random_eldl() -> Callable[..., DecisionList]:
    def make(rng: random.Random, max_n: int = 4, w: int = 3) -> DecisionList:
        n = rng.randint(1, max_n)
        entries = [(_form(rng, n, w), rng.randint(0, 1)) for _ in range(rng.randint(0, 5))]
        return DecisionList.build(ModelKind.ELDL, n, entries)
    return make


COORDINATES = [
    Fraction(0), Fraction(1), Fraction(1, 2), Fraction(1, 4), Fraction(3, 2), Fraction(-1, 2),
    Fraction(1, 3), Fraction(2, 5), Fraction(5, 7), Fraction(-1, 3), Fraction(7, 8),
]


@pytest.fixture
def random_defined_knn() -> Callable[..., List[KNNRep]]:
    """Well-defined kNN representations with rational anchors"""
    def make(
        rng: random.Random, count: int, max_n: int = 3, max_m: int = 6, max_k: int = 5, tries: int = 20000
    ) -> List[KNNRep]:
        found: List[KNNRep] = []
        for _ in range(tries):
            if len(found) == count:
                break
            n = rng.randint(1, max_n)
            m = rng.randint(2, max_m)
            anchors = list({tuple(rng.choice(COORDINATES) for _ in range(n)) for _ in range(m)})
            if len(anchors) < 2:
                continue
            rng.shuffle(anchors)
            split = rng.randint(1, len(anchors) - 1)
            r = KNNRep(
                embedding=Substitution.identity(n),
                positive=tuple(anchors[:split]),
                negative=tuple(anchors[split:]),
                k=rng.randint(1, min(max_k, len(anchors))),
            )
            if well_defined(r).defined:
                found.append(r)
        return found
    return make
