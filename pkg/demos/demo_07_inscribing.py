"""
Fitting a homothet inside the hull
==================================

If no hyperplane meets more than k member interiors and K is centrally
symmetric, then (sum tau_i / k) K, placed at the weighted center, lies in
the convex hull of the union.  A row of touching disks shows that the
factor 1/k cannot be enlarged.
"""
from pathlib import Path

from homocover.generators import gen_depth_k_grid, named_body
from homocover.geometry import Ball, Family, Homothet
from homocover.inscribing import inscribe_dual, verify_inscribed
from homocover.separability import check_depth_at_most_k
from homocover.svg import render_svg

###############################################################################
# Three touching unit disks: with k = 3 the inscribed disk has radius 1 and
# touches the two sides of the stadium-shaped hull.

row = Family(Ball((0, 0), 1), [Homothet((2 * i, 0), 1) for i in range(3)])
res = inscribe_dual(row, 3)
print("inscribed", res.inscribed, "verified", res.verified, res.verification)
bigger = Homothet(res.inscribed.translation, 1.001)
print("1.001 times larger fits:", verify_inscribed(bigger, row))

###############################################################################
# Grids with k rows of at most k translates, far apart.

for name in ("disk", "square", "hexagon"):
    body = named_body(name)
    for k in (1, 2, 3):
        fam = gen_depth_k_grid(body, k, k, 10 * k * body.diameter())
        ok = check_depth_at_most_k(fam, k, "exact-2d").ok
        print(f"{name:8s} k={k}: depth ok {ok}, inscribed verified {inscribe_dual(fam, k).verified}")

###############################################################################
# A picture of the two-row grid with its inscribed square.

fam = gen_depth_k_grid(named_body("square"), 2, 2, 10 * 2 * named_body("square").diameter())
svg = render_svg(fam, [("inscribed", inscribe_dual(fam, 2).inscribed)])
out = Path(__file__).with_name("depth_grid_inscribed.svg")
out.write_text(svg)
print("wrote", out)
