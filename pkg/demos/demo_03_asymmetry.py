"""
How asymmetric is a convex body?
================================

For an interior point q, let mu(q) be the smallest factor such that the
body reflected through q and scaled by mu(q) contains the body.  The
minimum over q is the asymmetry sigma: 1 for centrally symmetric bodies, at
most the dimension d, and exactly d for simplices.  For polytopes sigma is
the optimum of one linear program.
"""
import numpy as np

from homocover.asymmetry import asymmetry_at_point, minkowski_sigma
from homocover.geometry import Ball, Polytope, centroid, polar_polygon_2d

triangle = Polytope([(0, 0), (1, 0), (0, 1)])
square = Polytope([(1, 1), (-1, 1), (-1, -1), (1, -1)])
tetrahedron = Polytope([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)])

for name, body in [("square", square), ("triangle", triangle), ("tetrahedron", tetrahedron)]:
    res = minkowski_sigma(body)
    print(f"{name:12s} sigma = {res.sigma:.9f} at {np.round(res.center, 6)}")

###############################################################################
# The LP and a bisection on the feasibility problem agree.

print("bisection:", minkowski_sigma(triangle, method="bisect").sigma)

###############################################################################
# Off-center points are worse.  For the unit disk, mu((1/2, 0)) = 3.

print("disk at (1/2, 0):", asymmetry_at_point(Ball((0, 0), 1), (0.5, 0)))
print("triangle at its centroid:", asymmetry_at_point(triangle, centroid(triangle)))

###############################################################################
# A pentagon: move the origin to the optimal center, and the polar body P
# satisfies P inside -sigma P.

pentagon = Polytope([(0, 0), (3, 0), (4, 2), (1, 3), (-1, 1)])
res = minkowski_sigma(pentagon)
P = polar_polygon_2d(Polytope(pentagon.vertex_array - res.center))
print("sigma", res.sigma)
print("polar vertices", np.round(P.vertex_array, 4))
