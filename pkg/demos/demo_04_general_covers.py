"""
Covers for symmetric and asymmetric bodies
==========================================

For a centrally symmetric body K, a chain of homothets with coefficients
tau_i is covered by a translate of (sum tau_i) K.  Without symmetry the
factor grows to (sigma + 1)/2, where sigma is the asymmetry of K, so at
most (d + 1)/2.
"""
import numpy as np

from homocover.covering import cover_general, cover_symmetric, minimal_cover
from homocover.generators import gen_touching_chain, named_body
from homocover.geometry import Polytope

###############################################################################
# Hexagons: factor 1.

hexagon = named_body("hexagon")
fam = gen_touching_chain(hexagon, 5, [1, 0.5, 2, 1, 0.7], seed=1)
res = cover_symmetric(fam)
print("hexagon chain: scale", res.scale, "verified", res.verified)

###############################################################################
# Triangles: sigma = 2, factor 3/2.

triangle = Polytope([(0, 0), (1, 0), (0, 1)])
fam = gen_touching_chain(triangle, 4, seed=2)
res = cover_general(fam)
print("triangle chain: sigma", round(res.sigma, 9), "factor", round(res.factor, 9), "verified", res.verified)

###############################################################################
# How much of that is needed?  The smallest covering homothet is found by
# a linear program.  Random chains rarely need more than the sum of the
# coefficients; the sharp simplex demo shows a family that does.

ratios = []
for seed in range(20):
    fam = gen_touching_chain(triangle, 4, seed=seed)
    ratios.append(minimal_cover(fam).scale / float(fam.total_scale()))
print("needed factor over 20 random triangle chains: max", round(max(ratios), 4))

###############################################################################
# An irregular quadrilateral lies in between.

quad = Polytope([(0, 0), (2, 0), (3, 1), (1, 2)])
fam = gen_touching_chain(quad, 3, seed=0)
res = cover_general(fam)
print("quadrilateral: sigma", np.round(res.sigma, 6), "verified", res.verified)
