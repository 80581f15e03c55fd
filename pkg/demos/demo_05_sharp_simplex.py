"""
A family that needs almost (d + 1)/2
====================================

Small corner simplices placed along "wrapped diagonals" of a grid cannot be
separated by hyperplanes parallel to the facets of the big simplex K, yet
they touch every facet of K.  So K itself is the smallest covering
homothet, while the members' coefficients add up to only
(dN + 1) / (d(d+1)N/2 + 1) of K.  The needed factor tends to (d + 1)/2, so
for simplices and facet-parallel hyperplanes that factor is the right one.
"""
from pathlib import Path

from homocover.covering import cover_simplex_facet_parallel, minimal_cover
from homocover.generators import gen_sharp_simplex, sharp_simplex_ratio
from homocover.geometry import Homothet
from homocover.separability import check_nonseparable
from homocover.svg import render_svg

inst = gen_sharp_simplex(2, 5)
print("member cells:", inst.coordinates)
print("exact ratio:", inst.exact_ratio)

###############################################################################
# The three facet normals are the only directions that matter here.

print(check_nonseparable(inst.family, "restricted"))

###############################################################################
# The covering construction uses factor 3/2 and the optimum needs 16/11.

res = cover_simplex_facet_parallel(inst.family)
mc = minimal_cover(inst.family)
print("construction scale", res.scale, "verified", res.verified)
print("minimal scale", round(mc.scale, 12), "ratio", mc.scale / float(inst.family.total_scale()))

###############################################################################
# The ratio climbs toward 3/2 as N grows.

for N in (1, 5, 20, 100, 1000):
    r = sharp_simplex_ratio(2, N)
    print(f"N={N:5d}  ratio {r}  = {float(r):.6f}")

###############################################################################
# A picture: the eleven small triangles inside K.

out = Path(__file__).with_name("sharp_simplex_d2_N5.svg")
out.write_text(render_svg(inst.family, [("body", Homothet((0, 0), 1))]))
print("wrote", out)
