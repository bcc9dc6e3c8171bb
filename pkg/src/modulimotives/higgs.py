"""Motives of moduli spaces of rank-3 Higgs bundles of coprime degree.

Scaling the Higgs field gives a torus action on the (smooth, quasi-projective,
dimension ``2(9(g-1)+1)``) moduli space whose fixed locus is proper, so the
class of the total space is the sum over fixed components F of

    class(F) * L^twist(F),      twist(F) = 9(g-1) + 1 - dim(F),

the twist being the codimension of the attracting stratum (the downward flow
is Lagrangian, whence the formula).  The fixed components come in four types
according to how the underlying bundle splits under the torus:

* type (3): the Higgs field is zero; one component, the rank-3 bundle moduli
  space itself, with twist 0;
* type (1,1,1): a sum of three line bundles chained by the Higgs field; one
  component per pair ``(m1, m2)`` of section degrees with
  ``max(2m1+m2, m1+2m2) < 6g-6`` and ``d = m2 - m1 (mod 3)``, isomorphic to
  ``Jacobian x sym_curve(m1) x sym_curve(m2)``;
* types (1,2) and (2,1): a line bundle plus a rank-2 piece; one component per
  ``k = 0 .. g-2``, isomorphic to ``Jacobian x (rank-2 pair moduli space)``
  whose degree and chamber are affine functions of k and of the residue
  ``x = d mod 3`` in {1, 2}.

For the (1,2)/(2,1) components, the chamber index predicted by the closed
formula is re-derived from the exact rational stability parameter through
:func:`modulimotives.pairs.chamber_of`; any disagreement raises
:class:`ChamberMismatch` (no silent formula drift).

Pair classes always enter through the wall-crossing route
(:func:`modulimotives.pairs.pair_motive_flip`), which has no numerical
hypothesis; the closed forms are verification-only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .bundles import BundleSpec, InvalidDegree, bundle_motive, bundle_motive_fixed_det
from .motive import MotiveClass, jacobian, sym_curve, zero
from .pairs import ChamberSpec, chamber_of, pair_motive_flip


class ChamberMismatch(RuntimeError):
    """Closed-form chamber index disagrees with the wall/chamber search."""


@dataclass(frozen=True)
class HiggsSpec:
    """Genus and degree for the rank-3 Higgs moduli space."""

    g: int
    d: int

    def __post_init__(self) -> None:
        if self.g < 2:
            raise ValueError(f"genus must be >= 2, got {self.g}")
        if gcd(self.d, 3) != 1:
            raise InvalidDegree(f"degree {self.d} is not coprime to 3")

    @property
    def x(self) -> int:
        """The representative of d mod 3 in {1, 2}."""
        return self.d % 3

    def bundle_spec(self) -> BundleSpec:
        return BundleSpec(self.g, self.d)


@dataclass(frozen=True)
class FixedComponent:
    """One connected component of the fixed locus of the scaling action."""

    kind: str  # "(3)", "(1,1,1)", "(1,2)" or "(2,1)"
    params: tuple[int, ...]  # (m1, m2) for (1,1,1); (k,) for (1,2)/(2,1)
    dimension: int
    twist: int
    motive: MotiveClass


def higgs_dimension(g: int) -> int:
    return 2 * (9 * (g - 1) + 1)


def fixed_locus_bundles(spec: HiggsSpec) -> list[FixedComponent]:
    """The type-(3) component: the bundle moduli space, untwisted."""
    motive = bundle_motive(spec.bundle_spec())
    return [FixedComponent("(3)", (), 9 * (spec.g - 1) + 1, 0, motive)]


def fixed_locus_111(spec: HiggsSpec) -> list[FixedComponent]:
    """Type-(1,1,1) components, sorted by ``(m1, m2)``."""
    g, d = spec.g, spec.d
    bound = 6 * g - 6
    jac = jacobian(g)
    comps = []
    for m1 in range(bound):
        for m2 in range(bound):
            if 2 * m1 + m2 >= bound or m1 + 2 * m2 >= bound:
                continue
            if (m2 - m1 - d) % 3 != 0:
                continue
            motive = jac * sym_curve(g, m1) * sym_curve(g, m2)
            comps.append(
                FixedComponent(
                    "(1,1,1)",
                    (m1, m2),
                    g + m1 + m2,
                    8 * g - 8 - m1 - m2,
                    motive,
                )
            )
    return comps


def _pair_component(
    spec: HiggsSpec, kind: str, k: int, e: int, i: int, sigma: Fraction, twist: int
) -> FixedComponent:
    found = chamber_of(sigma, e)
    if found != i:
        raise ChamberMismatch(
            f"type {kind}, k={k}: stability parameter {sigma} lies in chamber "
            f"{found} of degree {e}, but the closed form predicts {i}"
        )
    pair = pair_motive_flip(ChamberSpec(g=spec.g, e=e, i=i))
    motive = jacobian(spec.g) * pair
    dimension = spec.g + (e + 2 * spec.g - 2)
    return FixedComponent(kind, (k,), dimension, twist, motive)


def fixed_locus_12(spec: HiggsSpec) -> list[FixedComponent]:
    """Type-(1,2) components, one per ``k = 0 .. g-2``."""
    g, x = spec.g, spec.x
    comps = []
    for k in range(g - 1):
        e = 4 * g - 3 * k - 7 + x
        i = 2 * g - 2 * k - 5 + x
        sigma = Fraction(k + 1, 2) - Fraction(x, 6)
        twist = 2 * g + 3 * k + 1 - x
        comps.append(_pair_component(spec, "(1,2)", k, e, i, sigma, twist))
    return comps


def fixed_locus_21(spec: HiggsSpec) -> list[FixedComponent]:
    """Type-(2,1) components, one per ``k = 0 .. g-2``."""
    g, x = spec.g, spec.x
    comps = []
    for k in range(g - 1):
        e = 4 * g - 4 - 3 * k - x
        i = 2 * g - 2 * k - 2 - x
        sigma = Fraction(k, 2) + Fraction(x, 6)
        twist = 2 * g + 3 * k - 2 + x
        comps.append(_pair_component(spec, "(2,1)", k, e, i, sigma, twist))
    return comps


def fixed_components(spec: HiggsSpec) -> list[FixedComponent]:
    """All fixed components in a deterministic order.

    Type (3) first, then (1,1,1) sorted by ``(m1, m2)``, then (1,2) and
    (2,1) each by k; output serialization is therefore reproducible.
    """
    return (
        fixed_locus_bundles(spec)
        + fixed_locus_111(spec)
        + fixed_locus_12(spec)
        + fixed_locus_21(spec)
    )


@lru_cache(maxsize=None)
def higgs_motive(spec: HiggsSpec) -> MotiveClass:
    """Class of the rank-3 Higgs moduli space."""
    acc = zero(spec.g)
    for comp in fixed_components(spec):
        acc = acc + comp.motive.tate_twist(comp.twist)
    if not acc.is_effective():
        raise ArithmeticError(f"Higgs class for {spec} has a negative coefficient")
    return acc


@lru_cache(maxsize=None)
def higgs_motive_mod_jac(spec: HiggsSpec) -> MotiveClass:
    """The cofactor Q with ``jacobian * Q = higgs_motive`` (checked).

    Every term of the assembly carries an explicit Jacobian factor: the
    type-(3) component contributes it through the varying determinant, the
    others through their Picard factor.  The cofactor is assembled directly
    by dropping exactly that factor from each component, and the defining
    property is then verified by re-multiplication.
    """
    g = spec.g
    acc = bundle_motive_fixed_det(spec.bundle_spec())
    for comp in fixed_locus_111(spec):
        m1, m2 = comp.params
        acc = acc + (sym_curve(g, m1) * sym_curve(g, m2)).tate_twist(comp.twist)
    for comp in fixed_locus_12(spec) + fixed_locus_21(spec):
        (k,) = comp.params
        x = spec.x
        if comp.kind == "(1,2)":
            e, i = 4 * g - 3 * k - 7 + x, 2 * g - 2 * k - 5 + x
        else:
            e, i = 4 * g - 4 - 3 * k - x, 2 * g - 2 * k - 2 - x
        pair = pair_motive_flip(ChamberSpec(g=g, e=e, i=i))
        acc = acc + pair.tate_twist(comp.twist)
    if jacobian(g) * acc != higgs_motive(spec):
        raise ArithmeticError(
            f"cofactor times Jacobian does not reproduce the Higgs class for {spec}"
        )
    return acc


@dataclass(frozen=True)
class AuditRow:
    kind: str
    params: tuple[int, ...]
    dimension: int
    twist: int
    recomputed_dimension: int
    ok: bool


@dataclass(frozen=True)
class AuditReport:
    genus: int
    degree: int
    rows: tuple[AuditRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(row.ok for row in self.rows)

    def render(self) -> str:
        """One line per component: kind, params, dimension, twist, verdict."""
        half = 9 * (self.genus - 1) + 1
        lines = [
            f"fixed-locus audit: genus={self.genus} degree={self.degree} "
            f"half-dimension={half}"
        ]
        for row in self.rows:
            params = ",".join(str(p) for p in row.params)
            lines.append(
                f"  kind={row.kind} params=({params}) dim={row.dimension} "
                f"twist={row.twist} recomputed-dim={row.recomputed_dimension} "
                f"{'PASS' if row.ok else 'FAIL'}"
            )
        lines.append("all components pass" if self.all_pass else "AUDIT FAILED")
        return "\n".join(lines)


def audit_fixed_loci(spec: HiggsSpec) -> AuditReport:
    """Check ``twist = 9(g-1)+1 - dim`` for every fixed component.

    The dimension is recomputed independently from the component's class as
    half its top realized degree, so the audit catches both wrong twists and
    wrong component classes.
    """
    half = 9 * (spec.g - 1) + 1
    rows = []
    for comp in fixed_components(spec):
        top = comp.motive.poincare_polynomial().degree
        recomputed = top // 2
        ok = (
            top % 2 == 0
            and recomputed == comp.dimension
            and comp.twist == half - comp.dimension
        )
        rows.append(
            AuditRow(comp.kind, comp.params, comp.dimension, comp.twist, recomputed, ok)
        )
    return AuditReport(spec.g, spec.d, tuple(rows))
