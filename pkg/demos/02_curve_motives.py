"""Classes generated by a curve: generators, reduction, realizations.

Fix a curve of genus g.  Classes are integer-polynomial combinations, in the
Lefschetz class L, of formal products of the generators S_b (the b-th
symmetric power of the weight-1 part of the curve motive, 1 <= b <= g).
Run with:  python3 demos/02_curve_motives.py
"""

from modulimotives import jacobian, projective_space, sym_curve, sym_h1

g = 2
print(f"== generators and reduction (genus {g}) ==")
for b in range(0, 2 * g + 2):
    print(f"S_{b} reduces to {sym_h1(g, b)!r}")

print()
print("== symmetric powers of the curve ==")
for j in range(0, 4):
    print(f"C^({j}) = {sym_curve(g, j)!r}")

print()
print("== the Jacobian and projective spaces ==")
print(f"Jacobian: {jacobian(g)!r}")
print(f"P^3:      {projective_space(g, 3)!r}")

print()
print("== a classical identity, checked in normal form ==")
# for g <= j <= 2g-2 the j-th symmetric power fibers over the Jacobian
j = 2 * g - 2
lhs = sym_curve(g, j)
rhs = sym_curve(g, 2 * g - 2 - j).tate_twist(j + 1 - g) + jacobian(
    g
) * projective_space(g, j - g)
print(f"C^({j}) == C^({2 * g - 2 - j}) * L^{j + 1 - g} + Jac * P^{j - g}:  {lhs == rhs}")

print()
print("== realizations ==")
jac = jacobian(g)
print(f"Hodge matrix of the Jacobian (rows p, columns q):")
for row in jac.hodge_realization().to_matrix():
    print("   ", " ".join(f"{c:2d}" for c in row))
print(f"Poincare polynomial: {jac.poincare_polynomial().to_str('t')}")
print(f"Total Betti number:  {jac.poincare_polynomial().evaluate(1)} (= 2^(2g))")
