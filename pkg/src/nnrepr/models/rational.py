"""Exact rational scalars.

Every coordinate, coefficient and constant in the package is a
``fractions.Fraction``. The pydantic ``Rational`` type below accepts only
integers, Fractions and the canonical strings ``"p"`` / ``"p/q"``; floats
and decimal strings are rejected so that no inexact value can sneak into a
tie comparison. Serialisation always produces the lowest-terms string.
"""
import math
import re
from fractions import Fraction
from functools import reduce
from typing import Any, Iterable, Tuple

from pydantic import BeforeValidator, PlainSerializer
from typing_extensions import Annotated

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def to_fraction(value: Any) -> Fraction:
    """Parse an exact rational, refusing anything inexact"""
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"not an exact rational: {value!r}")
        if "/" in text and int(text.split("/")[1]) == 0:
            raise ValueError("zero denominator")
        return Fraction(text)
    raise ValueError(f"not an exact rational: {value!r}")


def format_fraction(value: Fraction) -> str:
    """Canonical "p/q" or "p" text"""
    return str(value)


Rational = Annotated[
    Fraction,
    BeforeValidator(to_fraction),
    PlainSerializer(format_fraction, return_type=str),
]


def bit_length(value: Fraction) -> int:
    """Bits of |numerator| plus bits of denominator, at least one each"""
    return max(1, abs(value.numerator).bit_length()) + max(1, value.denominator.bit_length())


def common_denominator(values: Iterable[Fraction]) -> int:
    """Least common multiple of all denominators"""
    return reduce(lambda a, b: a * b // math.gcd(a, b), (v.denominator for v in values), 1)


def fractions(values: Iterable[Any]) -> Tuple[Fraction, ...]:
    return tuple(to_fraction(v) for v in values)


__all__ = [
    'Rational',
    'to_fraction',
    'format_fraction',
    'bit_length',
    'common_denominator',
    'fractions',
]
