"""
Covering a chain of balls
=========================

Take balls whose union cannot be cut by a line (or hyperplane) that misses
all of them.  One ball whose radius is the sum of the radii, centred at
the radius-weighted mean of the centers, covers them all.  This demo builds
random touching chains, checks the cover and shows that the hypothesis
matters.
"""
import numpy as np

from homocover.covering import ball_cover_slack, cover_balls, minimal_cover
from homocover.generators import gen_touching_chain
from homocover.geometry import Ball, Family, Homothet
from homocover.separability import check_nonseparable

###############################################################################
# Three collinear unit disks: the cover is the disk of radius 3 at the
# middle center, and it touches both end disks.

row = Family(Ball((0, 0), 1), [Homothet((2 * i, 0), 1) for i in range(3)])
res = cover_balls(row)
print("center", res.cover.translation, "radius", res.cover.scale, "verified", res.verified)
print("slack", ball_cover_slack(row, res.cover))

###############################################################################
# Random chains in the plane and in space, with radii between 0.1 and 10.

rng = np.random.default_rng(0)
worst = np.inf
for i in range(100):
    d = 2 + i % 2
    n = int(rng.integers(2, 10))
    fam = gen_touching_chain(Ball([0] * d, 1), n, rng.uniform(0.1, 10, n).tolist(), seed=i)
    worst = min(worst, ball_cover_slack(fam, cover_balls(fam).cover))
print("smallest slack over 100 chains:", worst)

###############################################################################
# The construction is usually far from optimal.  The smallest enclosing
# ball gives the ratio actually needed.

fam = gen_touching_chain(Ball((0, 0), 1), 6, seed=3)
print("needed / sum of radii:", minimal_cover(fam).scale / float(fam.total_scale()))

###############################################################################
# Two far apart disks can be separated, and then the cover fails.

apart = Family(Ball((0, 0), 1), [Homothet((0, 0), 1), Homothet((100, 0), 1)])
print(check_nonseparable(apart, "exact-2d"))
print("verified:", cover_balls(apart).verified)
