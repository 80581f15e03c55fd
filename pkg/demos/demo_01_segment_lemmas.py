"""
Covering and fitting segments on a line
=======================================

Everything in the package reduces to a statement about segments: project
the family onto a direction and look at the intervals you get.  Two facts
are used over and over.

* If the union of some segments is itself a segment, then one segment of
  total length, centred at the length-weighted center of mass, covers it.
* If no point lies inside more than k of the segments, then the segment of
  a k-th of the total length, centred at the same point, fits inside their
  hull.

Both are computed here with exact rationals.
"""
from fractions import Fraction

from homocover.intervals import (
    depth_profile,
    dual_segment_fit,
    goodman_segment_cover,
    max_open_depth,
    union_is_contiguous,
)

###############################################################################
# Covering a connected union
# --------------------------
# [0, 1] and [1, 3] touch.  Their center of mass is (1 * 1/2 + 2 * 2) / 3 = 3/2
# and the total length is 3, so the cover is [0, 3], exactly the union.

segments = [(0, 1), (1, 3)]
print("contiguous:", union_is_contiguous(segments))
print("cover:", goodman_segment_cover(segments))

###############################################################################
# Overlapping segments give some room to spare:

print("cover of [0,2],[1,3]:", goodman_segment_cover([(0, 2), (1, 3)]))

###############################################################################
# When the union has a gap the construction is refused and the gap is named.

print("gap:", union_is_contiguous([(0, 1), (3, 4)]))

###############################################################################
# Fitting inside the hull
# -----------------------
# Open interiors that share a point are counted by a sweep over endpoints.
# Touching segments do not overlap in this sense.

print("depth of touching pair:", max_open_depth([(0, 1), (1, 2)]))
print("depth of [0,2],[1,3],[1.5,4]:", max_open_depth([(0, 2), (1, 3), (Fraction(3, 2), 4)]))

###############################################################################
# A chain of touching unit segments has depth 1, so the fitted segment has
# the full length of the chain and fills the hull exactly: the bound cannot
# be improved.

chain = [(i, i + 1) for i in range(4)]
print("fit with k=1:", dual_segment_fit(chain, 1))

###############################################################################
# The subdivision behind the sweep keeps both the total length and the
# center of mass.

profile = depth_profile([(0, 2), (1, 3)])
print("breakpoints:", profile.breakpoints, "multiplicities:", profile.multiplicities)
print("weighted length:", profile.weighted_length(), "centroid:", profile.weighted_centroid())
