"""Shared test helpers: independent brute-force oracles and class builders.

The oracles here are deliberately naive and independent of the library's
code paths, so that frozen expected values are computed by a second route.
"""

from __future__ import annotations

from fractions import Fraction

from modulimotives import IntPoly, MotiveClass, from_tate_poly


def conv(a: list[int], b: list[int]) -> list[int]:
    """Schoolbook convolution of coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    while out and out[-1] == 0:
        out.pop()
    return out


def divmod_rational(num: list[int], den: list[int]) -> tuple[list[Fraction], list[Fraction]]:
    """Long division of coefficient lists over the rationals."""
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError
    rem = [Fraction(c) for c in num]
    while rem and rem[-1] == 0:
        rem.pop()
    q: list[Fraction] = [Fraction(0)] * max(0, len(rem) - len(den) + 1)
    lead = Fraction(den[-1])
    for k in range(len(rem) - len(den), -1, -1):
        c = rem[k + len(den) - 1] / lead
        q[k] = c
        for j, dc in enumerate(den):
            rem[k + j] -= c * dc
    while rem and rem[-1] == 0:
        rem.pop()
    return q, rem


def divides_exactly(num: list[int], den: list[int]) -> bool:
    """True iff den divides num in the *integer* polynomial ring."""
    q, rem = divmod_rational(num, den)
    return not rem and all(c.denominator == 1 for c in q)


def tate_sum(g: int, *exponents: int) -> MotiveClass:
    """The class ``L^m1 + ... + L^mr`` (the building block of the golden
    closed-form expressions)."""
    acc = IntPoly.zero()
    for k in exponents:
        acc = acc + IntPoly.monomial(k)
    return from_tate_poly(g, acc)


def tate_range(g: int, low: int, high: int) -> MotiveClass:
    """The class ``L^low + ... + L^high``."""
    return from_tate_poly(g, IntPoly.geometric(low, high))
