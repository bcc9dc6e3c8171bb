"""Normal-form classes in the Grothendieck ring of motives built from a curve.

Fix a smooth projective curve of genus ``g`` (with a rational point class
available).  The classes handled here live in the subring of the Grothendieck
ring of effective Chow motives generated by the curve motive.  A class is
stored in a normal form: an integer-polynomial combination, in the Lefschetz
class ``L``, of formal products of the generators

    ``S_b`` = class of the b-th symmetric power of the weight-1 part of the
    curve motive,   1 <= b <= g.

Indices outside ``[1, g]`` never appear: ``S_0 = 1``, and for ``b > g`` the
reduction rule ``S_b = S_(2g-b) * L^(b-g)`` (with ``S_b = 0`` for ``b > 2g``)
is applied on construction.  Products of generators are kept as formal
monomials; since the Hodge realization is multiplicative this loses nothing.

All values are immutable; binary operations check that both operands carry
the same genus (the reduction rule depends on g, so mixing genera is always
a bug).  Effectivity (all coefficients >= 0) is *checked* by
:meth:`MotiveClass.is_effective`, never assumed: differences of classes are
legitimate intermediate values in verification code.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator, Mapping

from .polyring import BiPoly, IntPoly

#: A formal product of generators S_b, stored as a sorted tuple of indices
#: in [1, g].  The empty tuple is the ring unit.
SymMonomial = tuple[int, ...]


class GenusMismatch(ValueError):
    """Binary operation on classes attached to different genera."""


def _validated_terms(
    genus: int, terms: Mapping[SymMonomial, IntPoly]
) -> dict[SymMonomial, IntPoly]:
    out: dict[SymMonomial, IntPoly] = {}
    for mono, poly in terms.items():
        mono = tuple(mono)
        if any(b < 1 or b > genus for b in mono):
            raise ValueError(f"monomial {mono} has an index outside [1, {genus}]")
        if tuple(sorted(mono)) != mono:
            raise ValueError(f"monomial {mono} is not sorted")
        if not isinstance(poly, IntPoly):
            raise TypeError("coefficients must be IntPoly")
        if poly:
            out[mono] = poly
    return out


class MotiveClass:
    """An element of the curve-generated Grothendieck ring, in normal form.

    ``terms`` maps each :data:`SymMonomial` to its coefficient polynomial in
    the Lefschetz class.  Zero coefficients are dropped, so the zero class
    has no terms.
    """

    __slots__ = ("_genus", "_terms")

    def __init__(self, genus: int, terms: Mapping[SymMonomial, IntPoly]) -> None:
        if genus < 1:
            raise ValueError(f"genus must be >= 1, got {genus}")
        object.__setattr__(self, "_genus", genus)
        object.__setattr__(self, "_terms", _validated_terms(genus, terms))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MotiveClass is immutable")

    # -- queries -----------------------------------------------------------

    @property
    def genus(self) -> int:
        return self._genus

    def as_dict(self) -> dict[SymMonomial, IntPoly]:
        return dict(self._terms)

    def coefficient(self, mono: SymMonomial) -> IntPoly:
        return self._terms.get(tuple(mono), IntPoly.zero())

    def items(self) -> Iterator[tuple[SymMonomial, IntPoly]]:
        """Iterate ``(monomial, coefficient)`` sorted by monomial."""
        return iter(sorted(self._terms.items()))

    def monomials(self) -> list[SymMonomial]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_effective(self) -> bool:
        """True iff every coefficient of every term is >= 0."""
        return all(p.is_nonneg() for p in self._terms.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MotiveClass):
            return NotImplemented
        return self._genus == other._genus and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def _check_genus(self, other: "MotiveClass") -> None:
        if self._genus != other._genus:
            raise GenusMismatch(
                f"cannot combine classes of genus {self._genus} and {other._genus}"
            )

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "MotiveClass") -> "MotiveClass":
        if not isinstance(other, MotiveClass):
            return NotImplemented
        self._check_genus(other)
        out = dict(self._terms)
        for mono, poly in other._terms.items():
            out[mono] = out.get(mono, IntPoly.zero()) + poly
        return MotiveClass(self._genus, out)

    def __neg__(self) -> "MotiveClass":
        return MotiveClass(self._genus, {m: -p for m, p in self._terms.items()})

    def __sub__(self, other: "MotiveClass") -> "MotiveClass":
        if not isinstance(other, MotiveClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "MotiveClass | IntPoly | int") -> "MotiveClass":
        if isinstance(other, IntPoly):
            return MotiveClass(
                self._genus, {m: p * other for m, p in self._terms.items()}
            )
        if isinstance(other, int) and not isinstance(other, bool):
            return MotiveClass(
                self._genus, {m: p * other for m, p in self._terms.items()}
            )
        if not isinstance(other, MotiveClass):
            return NotImplemented
        self._check_genus(other)
        out: dict[SymMonomial, IntPoly] = {}
        for m1, p1 in self._terms.items():
            for m2, p2 in other._terms.items():
                mono = tuple(sorted(m1 + m2))
                prod = p1 * p2
                if mono in out:
                    out[mono] = out[mono] + prod
                else:
                    out[mono] = prod
        return MotiveClass(self._genus, out)

    __rmul__ = __mul__

    def tate_twist(self, k: int) -> "MotiveClass":
        """Multiply by ``L^k`` (k >= 0)."""
        if k < 0:
            raise ValueError(f"negative Tate twist {k}")
        return MotiveClass(self._genus, {m: p.shift(k) for m, p in self._terms.items()})

    # -- realizations ------------------------------------------------------

    def hodge_realization(self) -> BiPoly:
        """Hodge polynomial: the coefficient of ``u^p v^q`` is ``h^(p,q)``.

        Ring homomorphism sending ``L`` to ``uv`` and each generator ``S_b``
        to its Hodge polynomial (see :func:`sym_h1_hodge_poly`); products of
        generators go to products of those polynomials.
        """
        total = BiPoly.zero()
        for mono, poly in self._terms.items():
            factor = BiPoly.from_diagonal(poly)
            for b in mono:
                factor = factor * sym_h1_hodge_poly(self._genus, b)
            total = total + factor
        return total

    def poincare_polynomial(self) -> IntPoly:
        """Specialize the Hodge realization via ``h^(p,q) -> t^(p+q)``."""
        return self.hodge_realization().diagonal_specialization()

    def euler_characteristic(self) -> int:
        value = self.poincare_polynomial().evaluate(-1)
        assert isinstance(value, int)
        return value

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        """Canonical JSON form: terms sorted by monomial, dense coefficients."""
        return {
            "genus": self._genus,
            "terms": [
                {"mono": list(mono), "coeffs": list(poly.coeffs)}
                for mono, poly in self.items()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "MotiveClass":
        terms = {
            tuple(entry["mono"]): IntPoly(entry["coeffs"]) for entry in data["terms"]
        }
        return cls(int(data["genus"]), terms)

    def __repr__(self) -> str:
        if not self._terms:
            return f"MotiveClass(g={self._genus}, 0)"
        parts = []
        for mono, poly in self.items():
            name = "1" if not mono else "*".join(f"S{b}" for b in mono)
            parts.append(f"{name}:({poly.to_str('L')})")
        return f"MotiveClass(g={self._genus}, " + " + ".join(parts) + ")"


# -- constructors of basic classes ------------------------------------------


def zero(g: int) -> MotiveClass:
    return MotiveClass(g, {})


def unit(g: int) -> MotiveClass:
    return MotiveClass(g, {(): IntPoly.one()})


def tate(g: int, k: int) -> MotiveClass:
    """The Tate class ``L^k``."""
    if k < 0:
        raise ValueError(f"negative Tate twist {k}")
    return MotiveClass(g, {(): IntPoly.monomial(k)})


def from_tate_poly(g: int, poly: IntPoly) -> MotiveClass:
    """The class whose unit-monomial coefficient is ``poly`` (in L)."""
    return MotiveClass(g, {(): poly})


def sym_h1(g: int, b: int) -> MotiveClass:
    """Normal form of the generator ``S_b`` for any b >= 0.

    ``S_0 = 1``; for ``b <= g`` the generator itself; for ``g < b <= 2g``
    the reduction ``S_(2g-b) * L^(b-g)``; zero for ``b > 2g``.
    """
    if b < 0:
        raise ValueError(f"negative symmetric-power index {b}")
    if b > 2 * g:
        return zero(g)
    if b > g:
        twist, b = b - g, 2 * g - b
    else:
        twist = 0
    mono: SymMonomial = () if b == 0 else (b,)
    return MotiveClass(g, {mono: IntPoly.monomial(twist)})


@lru_cache(maxsize=None)
def sym_curve(g: int, j: int) -> MotiveClass:
    """Class of the j-th symmetric power of the curve, in normal form.

    Expanding the j-th symmetric power of ``1 + h^1 + L`` gives
    ``sum over b of S_b * (1 + L + ... + L^(j-b))``, then each ``S_b`` is
    reduced.
    """
    if j < 0:
        raise ValueError(f"negative symmetric power {j}")
    acc = zero(g)
    for b in range(min(j, 2 * g) + 1):
        acc = acc + sym_h1(g, b) * IntPoly.geometric(0, j - b)
    return acc


@lru_cache(maxsize=None)
def jacobian(g: int) -> MotiveClass:
    """Class of the Jacobian: the sum of all ``S_b`` for 0 <= b <= 2g."""
    acc = zero(g)
    for b in range(2 * g + 1):
        acc = acc + sym_h1(g, b)
    return acc


def projective_space(g: int, n: int) -> MotiveClass:
    """Class of n-dimensional projective space, ``1 + L + ... + L^n``."""
    if n < 0:
        raise ValueError(f"negative projective-space dimension {n}")
    return from_tate_poly(g, IntPoly.geometric(0, n))


@lru_cache(maxsize=None)
def sym_h1_hodge_poly(g: int, b: int) -> BiPoly:
    """Hodge polynomial of ``S_b``: ``sum_p C(g,p) C(g,b-p) u^p v^(b-p)``.

    The formula is valid for every b >= 0 (it vanishes for b > 2g) and is
    compatible with the reduction rule: for ``g <= b <= 2g`` it equals the
    Hodge polynomial of ``S_(2g-b)`` times ``(uv)^(b-g)``.
    """
    return BiPoly(
        {
            (p, b - p): comb(g, p) * comb(g, b - p)
            for p in range(max(0, b - g), min(g, b) + 1)
        }
    )
