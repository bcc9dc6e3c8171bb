"""Motives of moduli spaces of rank-2 pairs (a bundle with a nonzero section).

For fixed degree ``e >= 2`` the space of stability parameters ``(0, e/2]``
breaks into chambers separated by the walls ``sigma_i = e/2 - i`` for
``i = 0 .. m`` with ``m = floor((e-1)/2)``; the moduli space of stable pairs
is constant in the chamber ``C_i = (sigma_(i+1), sigma_i)`` and is smooth of
dimension ``e + 2g - 2``.

Three independent routes compute its class:

* :func:`pair_motive_flip` -- the wall-crossing recursion.  Crossing the
  j-th wall changes the class by the class of the wall's center times a
  difference of projective-space classes, so

      class(i-th chamber) = sum over j <= i of
          jacobian * sym_curve(j) * (L^(e+g-2j-1) - L^j) / (L - 1),

  with the fraction expanded as a geometric block.  When
  ``3j > e + g - 1`` the block is genuinely negative (the flip shrinks that
  stratum); the total is nonetheless effective and this is checked.

* :func:`pair_motive_sym` -- a closed form in the ``S_b`` basis with
  coefficient polynomials :func:`sym_coeff_poly`; when some of those have
  negative coefficients, pairs of terms are folded across ``b = g`` into the
  manifestly non-negative :func:`folded_coeff_poly`.

* :func:`pair_motive_geo` -- a closed form in terms of symmetric powers of
  the curve, its Jacobian and projective spaces only.

The flip route is the trusted oracle (it is derived directly from the flip
description with no rearrangement); the two closed forms are verified
against it by the sweep suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .motive import (
    MotiveClass,
    from_tate_poly,
    jacobian,
    projective_space,
    sym_curve,
    sym_h1,
    zero,
)
from .polyring import IntPoly, exact_div


class InvalidChamber(ValueError):
    """Chamber index outside ``[0, floor((e-1)/2)]`` or degree < 2."""


class HypothesisViolation(ValueError):
    """Arguments violate the numerical hypothesis of a closed formula."""


class OnWall(ValueError):
    """The stability parameter equals a wall value."""


class OutOfRange(ValueError):
    """The stability parameter lies outside ``(0, e/2]``."""


@dataclass(frozen=True)
class ChamberSpec:
    """A chamber of the stability space for rank-2 pairs of degree e."""

    g: int
    e: int
    i: int

    def __post_init__(self) -> None:
        if self.g < 1:
            raise InvalidChamber(f"genus must be >= 1, got {self.g}")
        if self.e < 2:
            raise InvalidChamber(f"pair degree must be >= 2, got {self.e}")
        m = (self.e - 1) // 2
        if not 0 <= self.i <= m:
            raise InvalidChamber(
                f"chamber index {self.i} outside [0, {m}] for degree {self.e}"
            )


def chambers(e: int) -> tuple[int, list[Fraction]]:
    """Return ``(m, walls)``: the walls are ``e/2 - i`` for ``i = 0 .. m``."""
    if e < 2:
        raise InvalidChamber(f"pair degree must be >= 2, got {e}")
    m = (e - 1) // 2
    return m, [Fraction(e, 2) - i for i in range(m + 1)]


def chamber_of(sigma: Fraction | int, e: int) -> int:
    """Index of the chamber containing an exact stability parameter.

    Raises :class:`OnWall` when sigma is a wall and :class:`OutOfRange` when
    sigma is outside ``(0, e/2]``.
    """
    if e < 2:
        raise InvalidChamber(f"pair degree must be >= 2, got {e}")
    sigma = Fraction(sigma)
    if sigma <= 0 or sigma > Fraction(e, 2):
        raise OutOfRange(f"stability parameter {sigma} outside (0, {e}/2]")
    offset = Fraction(e, 2) - sigma  # lies in [0, e/2)
    if offset.denominator == 1:
        raise OnWall(f"stability parameter {sigma} is the wall of index {offset}")
    return int(offset)


def pair_dimension(spec: ChamberSpec) -> int:
    """Dimension of the pair moduli space: ``e + 2g - 2``."""
    return spec.e + 2 * spec.g - 2


def _flip_block(g: int, e: int, j: int) -> IntPoly:
    # (L^(e+g-2j-1) - L^j) / (L - 1), expanded exactly; negative when
    # e+g-2j-1 < j, empty when equal.
    hi = e + g - 2 * j - 1
    if hi >= j:
        return IntPoly.geometric(j, hi - 1)
    return -IntPoly.geometric(hi, j - 1)


@lru_cache(maxsize=None)
def pair_motive_flip(spec: ChamberSpec) -> MotiveClass:
    """Class of the pair moduli space via the wall-crossing recursion."""
    g, e, i = spec.g, spec.e, spec.i
    acc = zero(g)
    for j in range(i + 1):
        acc = acc + sym_curve(g, j) * _flip_block(g, e, j)
    result = jacobian(g) * acc
    if not result.is_effective():
        raise ArithmeticError(
            f"pair class for {spec} has a negative coefficient; "
            "this contradicts effectivity of the moduli space class"
        )
    return result


# (1 - T)^2 (1 - T^2), the common denominator of the coefficient polynomials
_DENOMINATOR = (
    (IntPoly.one() - IntPoly.variable()) ** 2 * (IntPoly.one() - IntPoly.monomial(2))
)


def sym_coeff_poly(g: int, i: int, e: int, b: int) -> IntPoly:
    """Coefficient polynomial of ``S_b`` in the pair class, as a polynomial.

    Equals ``(T^b - T^(e+g-1-2i)) (1 - T^(i-b+1)) (1 - T^(i-b+2))`` divided
    exactly by ``(1-T)^2 (1-T^2)``.  Requires ``0 <= b <= i < e/2`` and
    ``g >= 2``; the quotient has non-negative coefficients exactly when
    ``b <= e+g-1-2i``.
    """
    if g < 2:
        raise HypothesisViolation(f"genus must be >= 2, got {g}")
    if not 0 <= b <= i:
        raise HypothesisViolation(f"need 0 <= b <= i, got b={b}, i={i}")
    if not 2 * i < e:
        raise HypothesisViolation(f"need i < e/2, got i={i}, e={e}")
    one = IntPoly.one()
    num = (
        (IntPoly.monomial(b) - IntPoly.monomial(e + g - 1 - 2 * i))
        * (one - IntPoly.monomial(i - b + 1))
        * (one - IntPoly.monomial(i - b + 2))
    )
    return exact_div(num, _DENOMINATOR)


def folded_coeff_poly(g: int, i: int, e: int, b: int) -> IntPoly:
    """Non-negative recombination ``T^(b-g) * Q_b + Q_(2g-b)`` of two
    coefficient polynomials, obtained by folding the index range across g.

    Requires ``e+g-1-2i < b <= i < floor(e/2) <= 2g-3`` (which forces
    ``b > g``); the result is checked to have non-negative coefficients.
    """
    if not (e + g - 1 - 2 * i < b <= i < e // 2 <= 2 * g - 3):
        raise HypothesisViolation(
            f"need e+g-1-2i < b <= i < floor(e/2) <= 2g-3, "
            f"got g={g}, i={i}, e={e}, b={b}"
        )
    result = IntPoly.monomial(b - g) * sym_coeff_poly(g, i, e, b) + sym_coeff_poly(
        g, i, e, 2 * g - b
    )
    if not result.is_nonneg():
        raise ArithmeticError(
            f"folded coefficient polynomial for g={g}, i={i}, e={e}, b={b} "
            "has a negative coefficient"
        )
    return result


@lru_cache(maxsize=None)
def pair_motive_sym(spec: ChamberSpec) -> MotiveClass:
    """Class of the pair moduli space as a sum of ``S_b`` terms.

    Requires ``i < floor(e/2) <= 2g-3``.  When ``3i <= e+g-1`` every
    coefficient polynomial is non-negative and the plain sum over
    ``b = 0 .. i`` applies; otherwise the terms with negative coefficient
    polynomials (``b`` in ``[g+e-2i, i]``) are folded into the terms with
    ``b`` in ``[2g-i, g-e+2i]`` via :func:`folded_coeff_poly`.
    """
    g, e, i = spec.g, spec.e, spec.i
    if not i < e // 2:
        raise HypothesisViolation(f"need i < floor(e/2), got i={i}, e={e}")
    if not e // 2 <= 2 * g - 3:
        raise HypothesisViolation(f"need floor(e/2) <= 2g-3, got e={e}, g={g}")
    acc = zero(g)
    if 3 * i <= e + g - 1:
        for b in range(i + 1):
            acc = acc + sym_h1(g, b) * sym_coeff_poly(g, i, e, b)
    else:
        for b in range(i + 1):
            if 2 * g - i <= b <= g - e + 2 * i:
                acc = acc + sym_h1(g, b) * folded_coeff_poly(g, i, e, 2 * g - b)
            elif b < 2 * g - i or abs(b - g) < e - 2 * i:
                acc = acc + sym_h1(g, b) * sym_coeff_poly(g, i, e, b)
            # remaining b in [g+e-2i, i]: absorbed into the folded terms
    result = jacobian(g) * acc
    if not result.is_effective():
        raise ArithmeticError(f"pair class for {spec} has a negative coefficient")
    return result


@lru_cache(maxsize=None)
def pair_motive_geo(spec: ChamberSpec) -> MotiveClass:
    """Class of the pair moduli space in terms of symmetric powers of the
    curve, the Jacobian and projective spaces.

    Requires ``2i < e <= 4g-5``.  For ``3i < e+g`` the class is

        sum over k = 0..i of
            jacobian * sym_curve(k) * projective_space(e+g-3k-2) * L^k

    (a term is empty when the projective-space dimension is -1); for
    ``3i >= e+g`` the rearranged four-part sum applies, whose Tate factor on
    the Jacobian-squared term is :func:`sym_coeff_poly` at ``b = g``.
    """
    g, e, i = spec.g, spec.e, spec.i
    if not 2 * i < e:
        raise HypothesisViolation(f"need 2i < e, got i={i}, e={e}")
    if not e <= 4 * g - 5:
        raise HypothesisViolation(f"need e <= 4g-5, got e={e}, g={g}")
    jac = jacobian(g)
    if 3 * i < e + g:
        acc = zero(g)
        for k in range(i + 1):
            n = e + g - 3 * k - 2
            if n < 0:
                continue
            acc = acc + sym_curve(g, k) * projective_space(g, n).tate_twist(k)
        result = jac * acc
    else:
        acc = sym_curve(g, g - 1) * projective_space(g, e - 2 * g + 1).tate_twist(g - 1)
        for k in range(2 * g - 2 - i):
            acc = acc + sym_curve(g, k) * projective_space(g, e + g - 3 * k - 2).tate_twist(k)
        for k in range(2 * g - 2 - i, g - 1):
            twists = IntPoly.monomial(3 * g - 3 - 2 * k) + IntPoly.monomial(k)
            acc = acc + sym_curve(g, k) * projective_space(g, e - 2 * g + 1) * twists
        acc = acc + jac * from_tate_poly(g, sym_coeff_poly(g, i, e, g))
        result = jac * acc
    if not result.is_effective():
        raise ArithmeticError(f"pair class for {spec} has a negative coefficient")
    return result
