"""Reading the derived invariants off a normal form.

For a genus-3 real curve with two ovals (so r = 1), the normal form
determines: the Betti numbers of the real locus, the Borel cohomology,
the singular cohomology of the complex locus together with its conjugation
action, and the image of restriction to singular cohomology.
"""

from bredon import (
    catalog_get,
    fixed_poincare_polynomial,
    forgetful_image_dims,
    group_cohomology_dims,
    rho_localize,
    tau_localize,
    underlying_singular,
)

entry = catalog_get("curve", g=3, r=1)
module = entry.module
print("module:", module)
print("  (genus 3, r + 1 = 2 ovals)")

print("\nfixed locus (invert rho): two circles")
print("  Betti numbers:", dict(rho_localize(module).items()))
print("  Poincare polynomial:", fixed_poincare_polynomial(module))

print("\nBorel cohomology (invert tau, weight zero):")
print("  ", tau_localize(module))

singular = underlying_singular(module)
print("\nunderlying singular cohomology with involution:")
print("  dimensions:", singular.dims().to_list(2))
print("  trivial lines:", dict(singular.trivial), " regular summands:", dict(singular.regular))
print("  involution-fixed subspace:", singular.fixed_dims().to_list(2))

print("\ngroup cohomology H^1 of the involution action, degree by degree:")
print("  ", group_cohomology_dims(singular).to_list(2))

print("\nforgetful image inside singular cohomology:")
print("  ", forgetful_image_dims(module).to_list(2))
print("  degree-1 image has dimension g + r =", forgetful_image_dims(module).get(1))
