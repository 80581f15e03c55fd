"""Static SVG 1.1 pictures of planar families with optional overlays."""
from xml.sax.saxutils import quoteattr

import numpy as np

from .errors import UnsupportedDimension
from .geometry import Ball, ConvexBody, Family, Homothet

STYLES = {
    "member": "fill:#9ecae1;fill-opacity:0.6;stroke:#08519c;stroke-width:1",
    "cover": "fill:none;stroke:#d62728;stroke-width:1.5;stroke-dasharray:6,3",
    "minimal": "fill:none;stroke:#2ca02c;stroke-width:1.5",
    "inscribed": "fill:#ffbb78;fill-opacity:0.5;stroke:#ff7f0e;stroke-width:1.5;stroke-dasharray:2,2",
    "body": "fill:none;stroke:#444444;stroke-width:1",
}


def _shape(body: ConvexBody, h: Homothet):
    """('circle', center, radius) or ('polygon', vertices) in world coordinates."""
    t, s = h.translation_array, float(h.scale)
    if isinstance(body, Ball):
        return "circle", t + s * body.center_array, s * float(body.radius)
    V = t + s * body.vertex_array
    c = V.mean(axis=0)
    order = np.argsort(np.arctan2(V[:, 1] - c[1], V[:, 0] - c[0]))
    return "polygon", V[order]


def _bounds(shapes):
    lo, hi = np.full(2, np.inf), np.full(2, -np.inf)
    for sh in shapes:
        if sh[0] == "circle":
            lo = np.minimum(lo, sh[1] - sh[2])
            hi = np.maximum(hi, sh[1] + sh[2])
        else:
            lo = np.minimum(lo, sh[1].min(0))
            hi = np.maximum(hi, sh[1].max(0))
    return lo, hi


def render_svg(family: Family, overlays=(), size: float = 600.0) -> str:
    """SVG text for a planar family.

    ``overlays`` is a sequence of ``(role, homothet)`` pairs where role is a
    key of :data:`STYLES` (``cover``, ``minimal``, ``inscribed``, ``body``).
    """
    if family.dimension != 2:
        raise UnsupportedDimension("only planar families can be rendered")
    items = [("member", _shape(family.body, m)) for m in family.members]
    items += [(role, _shape(family.body, h)) for role, h in overlays]
    lo, hi = _bounds([sh for _, sh in items])
    extent = float(max(hi - lo)) or 1.0
    pad = 0.05 * extent
    scale = size / (extent + 2 * pad)
    width = (hi[0] - lo[0] + 2 * pad) * scale
    height = (hi[1] - lo[1] + 2 * pad) * scale

    def pt(p):
        # flip y so the picture has the usual orientation
        return (p[0] - lo[0] + pad) * scale, (hi[1] - p[1] + pad) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
        '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.3f}" height="{height:.3f}" viewBox="0 0 {width:.3f} {height:.3f}">',
        f'<rect x="0" y="0" width="{width:.3f}" height="{height:.3f}" style="fill:#ffffff"/>',
    ]
    for role, sh in items:
        style = quoteattr(STYLES[role])
        if sh[0] == "circle":
            x, y = pt(sh[1])
            out.append(
                f'<circle class="{role}" cx="{x:.4f}" cy="{y:.4f}" r="{sh[2] * scale:.4f}" style={style}/>'
            )
        else:
            pts = " ".join("%.4f,%.4f" % pt(p) for p in sh[1])
            out.append(f'<polygon class="{role}" points="{pts}" style={style}/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
