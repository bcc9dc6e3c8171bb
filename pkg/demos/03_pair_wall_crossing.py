"""Rank-2 pairs: walls, chambers, and three routes to one class.

A pair is a rank-2 bundle of degree e with a nonzero section; stability
depends on a rational parameter living in (0, e/2], which is cut into
chambers by the walls e/2 - i.  The moduli space only depends on the
chamber.  Run with:  python3 demos/03_pair_wall_crossing.py
"""

from fractions import Fraction

from modulimotives import (
    ChamberSpec,
    chamber_of,
    chambers,
    pair_motive_flip,
    pair_motive_geo,
    pair_motive_sym,
)

g, e = 3, 7
m, walls = chambers(e)
print(f"== degree e = {e}: {m + 1} chambers ==")
print("walls:", ", ".join(str(w) for w in walls))
sigma = Fraction(1, 6)
print(f"the parameter {sigma} lies in chamber {chamber_of(sigma, e)}")

print()
print(f"== one class, three routes (genus {g}) ==")
for i in range(m + 1):
    spec = ChamberSpec(g=g, e=e, i=i)
    flip = pair_motive_flip(spec)
    agree = ["flip"]
    # the closed form in the S_b basis needs i < floor(e/2) <= 2g-3
    if spec.i < spec.e // 2 <= 2 * g - 3:
        assert pair_motive_sym(spec) == flip
        agree.append("sym")
    # the geometric closed form needs 2i < e <= 4g-5
    if 2 * spec.i < spec.e <= 4 * g - 5:
        assert pair_motive_geo(spec) == flip
        agree.append("geo")
    betti = flip.poincare_polynomial()
    print(
        f"chamber {i}: routes {'/'.join(agree)} agree; "
        f"total Betti number {betti.evaluate(1)}, top degree {betti.degree}"
    )

print()
print("== crossing a wall can shrink a stratum ==")
# at (g,e,i) = (4,11,5) the last wall crossing subtracts a Tate-twisted
# stratum; exact arithmetic handles the signed block and the total class
# stays effective
before = pair_motive_flip(ChamberSpec(g=4, e=11, i=4))
after = pair_motive_flip(ChamberSpec(g=4, e=11, i=5))
delta = after - before
print(f"the wall-crossing delta is virtual (has negative coefficients): "
      f"{not delta.is_effective()}")
print(f"the class itself stays effective: {after.is_effective()}")
