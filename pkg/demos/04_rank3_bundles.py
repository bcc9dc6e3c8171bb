"""Moduli of semistable rank-3 bundles of coprime degree.

The fixed-determinant space has dimension 8(g-1); its class is a finite sum
of products of two symmetric powers of the curve with explicit Tate twists,
and the varying-determinant class is that times the Jacobian class.
Run with:  python3 demos/04_rank3_bundles.py
"""

from modulimotives import (
    BundleSpec,
    bundle_dimension_fixed_det,
    bundle_motive,
    bundle_motive_fixed_det,
)

spec = BundleSpec(g=2, d=1)
fixed = bundle_motive_fixed_det(spec)

print(f"== fixed determinant, genus {spec.g} ==")
print(f"class: {fixed!r}")
poly = fixed.poincare_polynomial()
print(f"Poincare polynomial: {poly.to_str('t')}")
print(f"palindromic: {list(poly.coeffs) == list(reversed(poly.coeffs))}")

h = fixed.hodge_realization()
dim = bundle_dimension_fixed_det(spec.g)
print(f"h^(1,1) = {h.coefficient(1, 1)} (Picard rank 1)")
print(f"Poincare duality h^(p,q) = h^({dim}-p,{dim}-q): "
      f"{all(h.coefficient(dim - p, dim - q) == c for (p, q), c in h.items())}")

print()
print("== Hodge matrix (rows p, columns q) ==")
for row in h.to_matrix():
    print(" ".join(f"{c:3d}" for c in row))

print()
print("== varying determinant ==")
full = bundle_motive(spec)
print(f"total Betti number: {full.poincare_polynomial().evaluate(1)} "
      f"(= 2^(2g) x {poly.evaluate(1)})")
