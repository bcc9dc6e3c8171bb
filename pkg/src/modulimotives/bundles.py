"""Motives of moduli spaces of semistable rank-3 bundles of coprime degree.

The fixed-determinant moduli space is smooth projective of dimension
``8(g-1)``; its class is a sum of products of two symmetric powers of the
curve with explicit pairs of Tate twists:

    class = sym_curve(g-1)^2 * L^(3g-3)
          + sum over (k1, k2) with k1+k2 < 2g-2, or k1+k2 = 2g-2 and
            k1 < g-1, of
                sym_curve(k1) * sym_curve(k2)
                * (L^(k1+2k2) + L^(8g-8-2k1-3k2)).

The full moduli space is the fixed-determinant class times the Jacobian
class.  Up to isomorphism the spaces do not depend on the degree d (dualizing
and twisting by line bundles identify all coprime degrees), so d enters only
through the coprimality validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .motive import MotiveClass, jacobian, sym_curve
from .polyring import IntPoly


class InvalidDegree(ValueError):
    """Degree not coprime to 3 (semistable = stable fails)."""


@dataclass(frozen=True)
class BundleSpec:
    """Genus and degree for the rank-3 bundle moduli space."""

    g: int
    d: int

    def __post_init__(self) -> None:
        if self.g < 2:
            raise ValueError(f"genus must be >= 2, got {self.g}")
        if gcd(self.d, 3) != 1:
            raise InvalidDegree(f"degree {self.d} is not coprime to 3")


def bundle_dimension_fixed_det(g: int) -> int:
    return 8 * (g - 1)


def bundle_dimension(g: int) -> int:
    return 9 * (g - 1) + 1


def _in_index_region(g: int, k1: int, k2: int) -> bool:
    s = k1 + k2
    return s < 2 * g - 2 or (s == 2 * g - 2 and k1 < g - 1)


@lru_cache(maxsize=None)
def _fixed_det_motive(g: int) -> MotiveClass:
    acc = (sym_curve(g, g - 1) * sym_curve(g, g - 1)).tate_twist(3 * g - 3)
    for k1 in range(2 * g - 1):
        for k2 in range(2 * g - 1 - k1):
            if not _in_index_region(g, k1, k2):
                continue
            twists = IntPoly.monomial(k1 + 2 * k2) + IntPoly.monomial(
                8 * g - 8 - 2 * k1 - 3 * k2
            )
            acc = acc + sym_curve(g, k1) * sym_curve(g, k2) * twists
    return acc


def bundle_motive_fixed_det(spec: BundleSpec) -> MotiveClass:
    """Class of the fixed-determinant rank-3 moduli space (d-independent)."""
    return _fixed_det_motive(spec.g)


def bundle_motive(spec: BundleSpec) -> MotiveClass:
    """Class of the rank-3 moduli space with varying determinant."""
    return bundle_motive_fixed_det(spec) * jacobian(spec.g)
