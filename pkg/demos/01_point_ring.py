"""Tour of the point ring.

The bigraded equivariant cohomology of a point is generated (in its
positive cone) by two classes: rho in bidegree (1, 1) and tau in (0, 1).
The negative cone is spanned by a single class theta in bidegree (0, -2)
and all of its formal divisions by rho and tau; every product of two
negative-cone classes vanishes.
"""

from bredon import M2Element, ONE, RHO, TAU, THETA, m2_basis, m2_multiply

print("generators and their bidegrees")
for element in (ONE, RHO, TAU, THETA):
    print(f"  {element!s:10s} lives in {element.bidegree()}")

print("\nthe defining relations")
for x, y in [(RHO, THETA), (TAU, THETA), (THETA, THETA)]:
    print(f"  {x} * {y} = {m2_multiply(x, y)}")

print("\ndivided classes: theta is uniquely divisible by rho and tau")
deep = M2Element.neg(2, 1)  # theta / (rho^2 tau)
print(f"  {deep} lives in {deep.bidegree()}")
print(f"  rho * ({deep}) = {RHO * deep}")
print(f"  rho^3 * ({deep}) = {RHO * RHO * RHO * deep}   (overshoots, so zero)")

print("\na corner of the multiplication table (exponents <= 1)")
basis = [b for b in m2_basis(1)]
header = " " * 18 + "".join(f"{str(b):>16s}" for b in basis)
print(header)
for x in basis:
    row = "".join(f"{str(x * y):>16s}" for y in basis)
    print(f"{str(x):>18s}{row}")
