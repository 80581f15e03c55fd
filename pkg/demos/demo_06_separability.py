"""
Deciding whether a family can be separated
==========================================

A family is non-separable when every line (hyperplane) through the hull of
the union meets some member.  Along a direction u this means the projected
intervals have a connected union.  In the plane the verdict can change
only where two projected endpoints of different members meet, so checking
those critical directions and one direction between each pair of them
settles the question exactly.
"""
import numpy as np

from homocover.geometry import Ball, Family, Homothet
from homocover.separability import (
    check_depth_at_most_k,
    check_nonseparable,
    critical_directions_2d,
    witness_depth,
    witness_separates,
)

disk = Ball((0, 0), 1)
touching = Family(disk, [Homothet((0, 0), 1), Homothet((2, 0), 1), Homothet((4, 0), 1)])
apart = Family(disk, [Homothet((0, 0), 1), Homothet((4, 0), 1)])

print(check_nonseparable(touching, "exact-2d"))
v = check_nonseparable(apart, "exact-2d")
print(v, "re-checked:", witness_separates(apart, v.witness))

###############################################################################
# The critical directions for two touching disks include the normal of the
# common tangent line x = 1.

ds = critical_directions_2d(Family(disk, touching.members[:2]))
print("events:", np.round(ds.events, 6))

###############################################################################
# Depth counts member interiors met by one line.  Two rows of two touching
# disks, ten units apart, admit a steep line through three interiors.

rows = Family(disk, [Homothet(c, 1) for c in [(0, 0), (2, 0), (0, 10), (2, 10)]])
v = check_depth_at_most_k(rows, 2, "exact-2d")
print(v.status, "max depth", v.max_depth, "witness meets", witness_depth(rows, v.witness))

###############################################################################
# In three dimensions the direction quantifier is sampled, and the verdict
# says so.

balls = Family(Ball((0, 0, 0), 1), [Homothet((0, 0, 0), 1), Homothet((2, 0, 0), 1)])
print(check_nonseparable(balls, "sampled", count=2000, seed=1))
