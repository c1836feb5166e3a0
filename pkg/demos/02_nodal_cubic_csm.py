"""The CSM pipeline on a nodal plane cubic, step by step.

V(x^3 + x^2 z - y^2 z) is a cubic curve with one node at [0:0:1].  A node
costs one unit of Euler characteristic: a smooth cubic is a torus (chi 0),
and the nodal one has chi 1.  The pipeline sees this through the Segre
classes of the singular point.
"""

import random

from charclass import (
    FieldSpec,
    Ring,
    SegreProfile,
    csm_from_shadow,
    csm_hypersurface,
    dimension_and_degree,
    jacobian_ideal,
    segre_degrees,
    shadow_from_segre,
)

R = Ring(("x", "y", "z"), FieldSpec(2147483647))
x, y, z = R.gens()
f = x**3 + x * x * z - y * y * z
rng = random.Random(11)

print("hypersurface:", f)

jac = jacobian_ideal(f)
print("\njacobian ideal:", jac)
st = dimension_and_degree(jac)
print("singular locus: dimension", st.dim, "degree", st.degree, "(the node)")

segre = segre_degrees(jac, rng=rng)
print("segre degrees of the singular locus:", segre.values)

profile = SegreProfile.from_segre(2, 2, segre)  # n = 2, r = deg f - 1 = 2
print("padded segre integers:", profile.stilde)

G = shadow_from_segre(profile)
print("shadow of the gradient graph:", G)

push = csm_from_shadow(G)
print("pushforward of the CSM class:", push)

res = csm_hypersurface(f, rng=rng)
print("\nall at once:", res.pushforward, "| degrees", res.degrees, "| euler", res.euler)
assert res.euler == 1
