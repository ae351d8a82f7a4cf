from fractions import Fraction
from typing import Any, Iterable, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..core.errors import ArityError
from .rational import Rational, common_denominator, to_fraction


class LinearForm(BaseModel):
    """Affine form <coeffs, x> + const over n Boolean variables, exact"""
    coeffs: Tuple[Rational, ...] = Field(default_factory=tuple)
    const: Rational = Fraction(0)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @classmethod
    def of(cls, coeffs: Iterable[Any], const: Any = 0) -> "LinearForm":
        return cls(coeffs=tuple(to_fraction(c) for c in coeffs), const=to_fraction(const))

    @classmethod
    def constant(cls, n: int, value: Any) -> "LinearForm":
        return cls.of([0] * n, value)

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    @property
    def is_integer(self) -> bool:
        return self.const.denominator == 1 and all(c.denominator == 1 for c in self.coeffs)

    @property
    def max_weight(self) -> int:
        """Largest absolute coefficient (ceiling for non-integers)"""
        return max((int(-(-abs(c) // 1)) for c in self.coeffs), default=0)

    @property
    def l1(self) -> Fraction:
        """|const| + sum of |coeffs|, an upper bound on |value| over the cube"""
        return abs(self.const) + sum((abs(c) for c in self.coeffs), Fraction(0))

    def evaluate(self, x: Sequence[int]) -> Fraction:
        if len(x) != len(self.coeffs):
            raise ArityError(f"form has arity {len(self.coeffs)}, input has {len(x)}")
        total = self.const
        for c, b in zip(self.coeffs, x):
            if b:
                total += c
        return total

    def int_value(self, x: Sequence[int]) -> int:
        """Evaluate an integer form without Fraction overhead"""
        total = int(self.const)
        for c, b in zip(self.coeffs, x):
            if b:
                total += int(c)
        return total

    def scale(self, factor: Any) -> "LinearForm":
        f = to_fraction(factor)
        return LinearForm(coeffs=tuple(c * f for c in self.coeffs), const=self.const * f)

    def shift(self, delta: Any) -> "LinearForm":
        return LinearForm(coeffs=self.coeffs, const=self.const + to_fraction(delta))

    def negate(self) -> "LinearForm":
        return self.scale(-1)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        if other.arity != self.arity:
            raise ArityError(f"cannot add forms of arity {self.arity} and {other.arity}")
        return LinearForm(
            coeffs=tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            const=self.const + other.const
        )

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + other.negate()

    def with_coefficient(self, index: int, delta: Any) -> "LinearForm":
        """Add delta to the coefficient of x_{index+1}"""
        coeffs = list(self.coeffs)
        coeffs[index] += to_fraction(delta)
        return LinearForm(coeffs=tuple(coeffs), const=self.const)

    def attainable_values(self) -> Tuple[int, ...]:
        """Every value an integer form takes on the cube, ascending"""
        values = {int(self.const)}
        for c in self.coeffs:
            ci = int(c)
            if ci:
                values |= {v + ci for v in values}
        return tuple(sorted(values))

    def __str__(self) -> str:
        terms = [f"{c}*x{i + 1}" for i, c in enumerate(self.coeffs) if c]
        terms.append(str(self.const))
        return " + ".join(terms)


def integer_scale(forms: Sequence[LinearForm]) -> Tuple[LinearForm, ...]:
    """Multiply all forms by their common denominator"""
    d = common_denominator(v for f in forms for v in (*f.coeffs, f.const))
    return tuple(f.scale(d) for f in forms)


def dummy_bound(forms: Sequence[LinearForm]) -> int:
    """B = 1 + max over forms of |const| + sum |coeffs|; every value lies in (-B, B)"""
    return 1 + max((int(f.l1) for f in forms), default=0)


__all__ = ['LinearForm', 'integer_scale', 'dummy_bound']
