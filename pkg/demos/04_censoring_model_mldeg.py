"""Maximum likelihood degree of the random censoring model with two events.

The model lives in P^3 with probability coordinates p0, p1, p2, p12 and is
cut out by one cubic.  The likelihood p0^u0 p1^u1 p2^u2 p12^u12 is maximized
on the open part U where no coordinate and no coordinate sum vanishes; the
number of its critical points for generic data equals the signed Euler
characteristic of U.
"""

import random

from charclass import FieldSpec, Ideal, Ring, ml_degree

R = Ring(("p0", "p1", "p2", "p12"), FieldSpec(2147483647))
p0, p1, p2, p12 = R.gens()

model = 2 * p0 * p1 * p2 + p1 * p1 * p2 + p1 * p2 * p2 - p0 * p0 * p12 + p1 * p2 * p12
print("model hypersurface:", model)

res = ml_degree(Ideal(R, [model]), rng=random.Random(5))
print("\nchi of the model surface:     ", res.chi_model)
print("chi of the cut by p0*p1*p2*p12*(p0+p1+p2+p12):", res.chi_cut)
print("chi of the open part U:       ", res.chi_model - res.chi_cut)
print("dim U:", res.dim, " -> ML degree:", res.ml_degree)
for w in res.warnings:
    print("note:", w)
assert res.ml_degree == 3
