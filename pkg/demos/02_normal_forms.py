"""Building modules in normal form.

Every module here is a finite direct sum of two kinds of summands: free
ones, written M2[p,q], and antipodal-sphere ones, written An[r].  The
isomorphism type is the pair of multiplicity maps, so constructing a
module means listing keys with multiplicities.
"""

from bredon import direct_sum, make_module, rank_polynomial, suspend
from bredon.cli import render_rank_lattice

point = make_module([(0, 0, 1)])
print("the point:", point)

p1 = make_module([(0, 0, 1), (2, 1, 1)])
print("the projective line:", p1)

print("\ndirect sums merge multiplicities:")
print("  ", direct_sum(p1, p1))

print("\nsuspension shifts free keys by (p, q); antipodal keys only see p:")
orbit = make_module([], [(0, 0, 1)])
print("   free orbit suspended by (3, 2):", suspend(orbit, 3, 2))
print("   P^1 suspended by (2, 1):      ", suspend(p1, 2, 1))

p3 = make_module([(2 * i, i, 1) for i in range(4)])
print("\nprojective 3-space:", p3)
print("rank polynomial R(u,v) =", rank_polynomial(p3))
print("\nits rank lattice:")
print(render_rank_lattice(p3))

k3 = make_module([(0, 0, 1), (2, 0, 1), (2, 2, 1), (4, 2, 1)], [(2, 0, 10)])
print("\na K3 surface whose real part is two spheres:")
print(render_rank_lattice(k3))
