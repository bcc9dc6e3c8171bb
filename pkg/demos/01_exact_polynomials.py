"""Exact polynomial arithmetic: the substrate everything else sits on.

Coefficients are Python ints, so nothing ever overflows and nothing is ever
rounded.  Run with:  python3 demos/01_exact_polynomials.py
"""

from modulimotives import BiPoly, IntPoly, NonExactDivision, exact_div

one = IntPoly.one()
T = IntPoly.variable()

print("== ring arithmetic ==")
p = one + T + T**2
q = IntPoly.geometric(0, 4)  # 1 + T + T^2 + T^3 + T^4
print(f"({p.to_str()}) * ({q.to_str()}) = {(p * q).to_str()}")

print()
print("== exact division ==")
# quotients that are secretly polynomials are produced by long division with
# a remainder check, never by a rational-function type
num = (one - T**2) * (one - T**3)
den = (one - T) ** 2
print(f"({num.to_str()}) / (1 - T)^2 = {exact_div(num, den).to_str()}")

try:
    exact_div(one + T, one - T)
except NonExactDivision as exc:
    print(f"(1 + T) / (1 - T) raises NonExactDivision: {exc}")

print()
print("== geometric blocks ==")
# (T^7 - T^2) / (T - 1) expanded directly:
print(f"T^2 + ... + T^6 = {IntPoly.geometric(2, 6).to_str()}")

print()
print("== two variables ==")
h = BiPoly({(1, 0): 2, (0, 1): 2})  # the Hodge polynomial of a genus-2 h^1
print(f"h = {h!r}")
print(f"h^2 = {(h * h)!r}")
print(f"h is Hodge-symmetric: {h.is_symmetric()}")
