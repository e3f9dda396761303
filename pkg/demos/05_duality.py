"""Duality symmetries of compact Real manifolds.

For a compact Real n-manifold the free multiplicities are symmetric under
(p, q) <-> (2n - p, n - q) and the antipodal ones under
(s, t) <-> (2n - s - t, t).  The twisted projective plane carries a
half-turn involution that is not a Real structure, and its normal form
breaks the mirror.
"""

from bredon import catalog_get, homology_dual, pd_symmetric, real_manifold_validate

k3 = catalog_get("k3", b_star=4, chi=4)
print("K3 with real part two spheres:", k3.module)
print("  mirror symmetry at n=2:", pd_symmetric(k3.module, 2).holds)
report = real_manifold_validate(k3.module, 2, has_fixed_point=True, connected=True)
print("  all manifold restrictions pass:", report.passed)

twisted = catalog_get("twisted_plane")
print("\ntwisted projective plane:", twisted.module)
verdict = pd_symmetric(twisted.module, 1)
print("  mirror symmetry at n=1:", verdict.holds)
for violation in verdict.violations:
    print(
        f"  violation: free key {violation.key} has multiplicity "
        f"{violation.count}, but its mirror {violation.mirror} has "
        f"{violation.mirror_count}"
    )
print("  hence no Real-manifold structure is possible.")

sb = catalog_get("severi_brauer_odd", k=1)
print("\npointless 3-dimensional conic bundle:", sb.module)
print("  the two antipodal summands are each other's mirrors at n=3:",
      pd_symmetric(sb.module, 3).holds)

print("\nhomology normal form (opposite grading): antipodal keys shift by n")
print("  cohomology:", sb.module)
dual = homology_dual(sb.module)
print("  homology antipodal keys:", dual.antipodal)
