"""The cubic threefold search, with and without the surjectivity hypothesis.

Input: Betti numbers 1, 0, 1, 10, 1, 0, 1 for the complex locus and
2, 1, 1, 2 for the real locus (a 3-sphere plus real projective 3-space),
with a real point, connectivity and duality.  Without further hypotheses
the data admits several decompositions, some of which contain positive
antipodal spheres and are therefore not Galois-Maximal.  Requiring the
restriction map to be onto in degree 4 removes every non-GM candidate,
which is exactly the content of the threefold GM criterion.  Note that
even then the free weights are not pinned down: three GM decompositions
remain, and singling out the classical one further uses the geometry of a
real line on the cubic.
"""

import json
from pathlib import Path

from bredon import (
    ConstraintSet,
    catalog_get,
    classify,
    enumerate_decompositions,
    threefold_predict,
)

data = json.loads((Path(__file__).parent / "data" / "cubic_s3_rp3.json").read_text())
with_hypothesis = ConstraintSet.from_json_dict(data)
without = ConstraintSet.from_json_dict({**data, "forgetful_onto_degrees": None})

print("without the degree-4 surjectivity hypothesis:")
for module in enumerate_decompositions(without):
    print(f"  [{classify(module).value:>7s}] {module}")

prediction = threefold_predict(with_hypothesis)
print("\nthreefold criterion applicable:", prediction.applicable)
print("with the hypothesis (restriction onto in degree 4):")
classical = catalog_get("cubic_threefold_s3_rp3").module
for module in enumerate_decompositions(with_hypothesis):
    marker = "  <- the classical decomposition" if module == classical else ""
    print(f"  [{classify(module).value:>7s}] {module}{marker}")
