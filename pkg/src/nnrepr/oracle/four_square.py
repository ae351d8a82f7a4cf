from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple

from ..models.rational import to_fraction


def _integer_squares(n: int, terms: int, cap: int) -> Optional[Tuple[int, ...]]:
    """n as a sum of `terms` squares, each root <= cap, roots non-increasing"""
    if terms == 0:
        return () if n == 0 else None
    if n > terms * cap * cap:
        return None
    top = min(cap, isqrt(n))
    for a in range(top, -1, -1):
        rest = n - a * a
        if rest > (terms - 1) * a * a:
            break
        tail = _integer_squares(rest, terms - 1, a)
        if tail is not None:
            return (a, *tail)
    return None


def four_square(v: Fraction) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """(a, b, c, d) with a^2 + b^2 + c^2 + d^2 = v, for rational v >= 0"""
    v = to_fraction(v)
    if v < 0:
        raise ValueError(f"cannot write negative {v} as a sum of squares")
    q = v.denominator
    roots = _integer_squares(v.numerator * q, 4, isqrt(v.numerator * q))
    if roots is None:
        raise ArithmeticError(f"no four-square decomposition found for {v}")
    result = tuple(Fraction(r, q) for r in roots)
    if sum(r * r for r in result) != v:
        raise ArithmeticError(f"four-square identity failed for {v}: {result}")
    return result  # type: ignore[return-value]


__all__ = ['four_square']
