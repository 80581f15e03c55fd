"""Convex bodies, homothets and families, with the support / projection /
membership primitives the rest of the package is built on.

Bodies are closed: points on the boundary count as inside.  Geometric
predicates use an absolute tolerance of ``TOL``.

Coordinates and scales are stored exactly as given (``int``, ``Fraction``
or ``float``) so that exact instances survive serialization; the numeric
code works on the float views (``.center_array``, ``.vertex_array`` ...).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Integral, Rational, Real
from typing import Sequence, Union

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from . import _lp
from .errors import InvalidArgument, UnsupportedShape

TOL = 1e-9


def as_number(x):
    """Normalize a scalar to ``int``, ``Fraction`` or ``float``."""
    if isinstance(x, bool):
        raise InvalidArgument(f"not a number: {x!r}")
    if isinstance(x, Integral):
        return int(x)
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return as_number(Fraction(x.numerator, x.denominator))
    if isinstance(x, Real):
        v = float(x)
        if not np.isfinite(v):
            raise InvalidArgument(f"non-finite coordinate: {x!r}")
        return v
    raise InvalidArgument(f"not a number: {x!r}")


def as_vector(xs) -> tuple:
    if isinstance(xs, np.ndarray):
        xs = xs.tolist()
    vec = tuple(as_number(x) for x in xs)
    if not vec:
        raise InvalidArgument("vectors need at least one coordinate")
    return vec


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def _unit(u, name="direction"):
    u = np.asarray(u, dtype=float)
    norm = np.linalg.norm(u)
    if norm == 0:
        raise InvalidArgument(f"{name} must be non-zero")
    return u, norm


@dataclass(frozen=True)
class Ball:
    """Euclidean ball ``center + radius * B``."""

    center: tuple
    radius: object

    def __post_init__(self):
        object.__setattr__(self, "center", as_vector(self.center))
        object.__setattr__(self, "radius", as_number(self.radius))
        if not self.radius > 0:
            raise InvalidArgument(f"ball radius must be positive, got {self.radius}")

    @property
    def dimension(self) -> int:
        return len(self.center)

    @cached_property
    def center_array(self) -> np.ndarray:
        return np.array(self.center, dtype=float)

    def diameter(self) -> float:
        return 2.0 * float(self.radius)


@dataclass(frozen=True)
class Polytope:
    """Full-dimensional convex polytope given by its vertex list.

    The list must be minimal: no listed point may lie in the hull of the
    others.  Use :meth:`from_points` to build one from an arbitrary cloud.
    """

    vertices: tuple

    def __post_init__(self):
        verts = tuple(as_vector(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise InvalidArgument("polytope needs vertices")
        d = len(verts[0])
        if any(len(v) != d for v in verts):
            raise InvalidArgument("vertices have mixed dimensions")
        if len(verts) < d + 1:
            raise InvalidArgument(
                f"a full-dimensional polytope in R^{d} needs at least {d + 1} vertices"
            )
        V = self.vertex_array
        if np.linalg.matrix_rank(V[1:] - V[0], tol=TOL) < d:
            raise InvalidArgument("vertices do not affinely span the space")
        if d == 1:
            if len(verts) != 2:
                raise InvalidArgument("a segment has exactly two vertices")
        else:
            try:
                hull = ConvexHull(V)
            except QhullError as exc:
                raise InvalidArgument(f"degenerate vertex set: {exc}") from None
            if len(hull.vertices) != len(verts):
                raise InvalidArgument(
                    "vertex list is not minimal: some points are not extreme"
                )

    @classmethod
    def from_points(cls, points) -> "Polytope":
        """Convex hull of ``points`` (any cloud; interior points are dropped)."""
        P = np.asarray(points, dtype=float)
        if P.ndim != 2:
            raise InvalidArgument("points must be a 2-D array")
        if P.shape[1] == 1:
            return cls([[P.min()], [P.max()]])
        try:
            hull = ConvexHull(P)
        except QhullError as exc:
            raise InvalidArgument(f"degenerate point cloud: {exc}") from None
        # qhull returns 2-D hull vertices in ccw order; keep it
        idx = hull.vertices if P.shape[1] == 2 else np.sort(hull.vertices)
        src = points if not isinstance(points, np.ndarray) else points.tolist()
        return cls([src[i] for i in idx])

    @property
    def dimension(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def vertex_array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=float)

    @property
    def is_simplex(self) -> bool:
        return len(self.vertices) == self.dimension + 1

    def diameter(self) -> float:
        V = self.vertex_array
        diffs = V[:, None, :] - V[None, :, :]
        return float(np.sqrt((diffs ** 2).sum(-1)).max())


ConvexBody = Union[Ball, Polytope]


@dataclass(frozen=True)
class Homothet:
    """The set ``translation + scale * K`` for the owning family's body K."""

    translation: tuple
    scale: object

    def __post_init__(self):
        object.__setattr__(self, "translation", as_vector(self.translation))
        object.__setattr__(self, "scale", as_number(self.scale))
        if not self.scale > 0:
            raise InvalidArgument(f"homothety coefficient must be positive, got {self.scale}")

    @cached_property
    def translation_array(self) -> np.ndarray:
        return np.array(self.translation, dtype=float)


@dataclass(frozen=True)
class Family:
    """A body K together with a non-empty list of positive homothets of K."""

    body: ConvexBody
    members: tuple

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        if not members:
            raise InvalidArgument("a family needs at least one member")
        d = self.body.dimension
        for i, m in enumerate(members):
            if not isinstance(m, Homothet):
                raise InvalidArgument(f"member {i} is not a Homothet")
            if len(m.translation) != d:
                raise InvalidArgument(
                    f"member {i} has dimension {len(m.translation)}, body has {d}"
                )

    @property
    def dimension(self) -> int:
        return self.body.dimension

    def __len__(self):
        return len(self.members)

    @cached_property
    def translations(self) -> np.ndarray:
        return np.array([m.translation for m in self.members], dtype=float)

    @cached_property
    def scales(self) -> np.ndarray:
        return np.array([float(m.scale) for m in self.members])

    def total_scale(self):
        """Sum of homothety coefficients, exact when every scale is exact."""
        taus = [m.scale for m in self.members]
        if all(is_exact(t) for t in taus):
            return as_number(sum(Fraction(t) for t in taus))
        return float(sum(float(t) for t in taus))

    def weighted_center(self) -> np.ndarray:
        """Scale-weighted mean of the translations."""
        w = self.scales
        return (w[:, None] * self.translations).sum(0) / w.sum()

    def member_vertices(self) -> np.ndarray:
        """Vertices of every member, shape (n, m, d).  Polytope bodies only."""
        if not isinstance(self.body, Polytope):
            raise UnsupportedShape("member vertices are defined for polytope bodies only")
        V = self.body.vertex_array
        return self.translations[:, None, :] + self.scales[:, None, None] * V[None]

    def with_members(self, members: Sequence[Homothet]) -> "Family":
        return Family(self.body, tuple(members))


# ----------------------------------------------------------------------------
# support, projection, membership


def support(body: ConvexBody, u) -> float:
    """Support function h_K(u) = max over x in K of <x, u>."""
    u, norm = _unit(u)
    if isinstance(body, Ball):
        return float(body.center_array @ u + float(body.radius) * norm)
    return float((body.vertex_array @ u).max())


def support_many(body: ConvexBody, U) -> np.ndarray:
    """Vectorized support function over the rows of ``U``."""
    U = np.atleast_2d(np.asarray(U, dtype=float))
    if isinstance(body, Ball):
        return U @ body.center_array + float(body.radius) * np.linalg.norm(U, axis=1)
    return (U @ body.vertex_array.T).max(axis=1)


def _check_unit(u):
    u = np.asarray(u, dtype=float)
    if abs(np.linalg.norm(u) - 1.0) > TOL:
        raise InvalidArgument(f"direction must be a unit vector, |u| = {np.linalg.norm(u)}")
    return u


def project_interval(member: Homothet, body: ConvexBody, u):
    """Orthogonal projection of ``member`` onto the unit direction ``u``."""
    from .intervals import Interval

    u = _check_unit(u)
    c = float(member.translation_array @ u)
    tau = float(member.scale)
    return Interval(c - tau * support(body, -u), c + tau * support(body, u))


def project_family(family: Family, u) -> tuple:
    """Projected (lo, hi) arrays of every member onto direction ``u``."""
    u = _check_unit(u)
    centers = family.translations @ u
    hi = centers + family.scales * support(family.body, u)
    lo = centers - family.scales * support(family.body, -u)
    return lo, hi


def member_scaled(p, c, body: ConvexBody, tol: float = TOL) -> bool:
    """True iff ``p`` lies in ``c * K`` (closed, within ``tol``)."""
    p = np.asarray(p, dtype=float)
    c = float(c)
    if c < 0:
        raise InvalidArgument("scale must be non-negative")
    if isinstance(body, Ball):
        return bool(np.linalg.norm(p - c * body.center_array) <= c * float(body.radius) + tol)
    if c == 0:
        return bool(np.abs(p).max() <= tol)
    return _lp.hull_residual(body.vertex_array, p / c) * c <= tol


def hull_contains_point(p, points, tol: float = TOL) -> bool:
    """True iff ``p`` is a convex combination of ``points`` (within ``tol``)."""
    P = np.atleast_2d(np.asarray(points, dtype=float))
    if P.size == 0:
        raise InvalidArgument("point set must be non-empty")
    return _lp.hull_residual(P, p) <= tol


def is_interior(body: ConvexBody, q, tol: float = TOL) -> bool:
    """Strict interior test with a small safety margin."""
    q = np.asarray(q, dtype=float)
    if isinstance(body, Ball):
        return bool(np.linalg.norm(q - body.center_array) < float(body.radius) - tol)
    return _lp.interior_margin(body.vertex_array, q) > tol


def centroid(body: ConvexBody) -> np.ndarray:
    """Center of mass of a ball, a simplex, or a planar polygon."""
    if isinstance(body, Ball):
        return body.center_array.copy()
    V = body.vertex_array
    if body.is_simplex:
        return V.mean(axis=0)
    if body.dimension != 2:
        raise UnsupportedShape(
            "centroid of a polytope with more than d+1 vertices is only supported in 2-D"
        )
    V = _ccw_order(V)
    # fan triangulation from the first vertex
    a = V[0]
    area = 0.0
    moment = np.zeros(2)
    for b, c in zip(V[1:-1], V[2:]):
        t = 0.5 * _cross(b - a, c - a)
        area += t
        moment += t * (a + b + c) / 3.0
    return moment / area


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _ccw_order(V: np.ndarray) -> np.ndarray:
    center = V.mean(axis=0)
    angles = np.arctan2(V[:, 1] - center[1], V[:, 0] - center[0])
    return V[np.argsort(angles)]


def polar_polygon_2d(polygon: Polytope) -> Polytope:
    """Polar body {p : <p, q> <= 1 for all q in K} of a polygon around the origin.

    Each edge line <n, x> = 1 of the polygon becomes the vertex n of the polar.
    """
    if not isinstance(polygon, Polytope) or polygon.dimension != 2:
        raise InvalidArgument("polar_polygon_2d expects a 2-D polytope")
    V = _ccw_order(polygon.vertex_array)
    normals = []
    for a, b in zip(V, np.roll(V, -1, axis=0)):
        if _cross(a, b) <= TOL:
            raise InvalidArgument("origin must lie strictly inside the polygon")
        normals.append(np.linalg.solve(np.array([a, b]), np.ones(2)))
    return Polytope(np.array(normals))


def translate_body(body: ConvexBody, shift) -> ConvexBody:
    """K + shift (float coordinates)."""
    shift = np.asarray(shift, dtype=float)
    if isinstance(body, Ball):
        return Ball(body.center_array + shift, body.radius)
    return Polytope(body.vertex_array + shift)


def centrally_symmetric_center(body: ConvexBody, tol: float = TOL):
    """Center of symmetry of ``body``, or None when it is not symmetric."""
    if isinstance(body, Ball):
        return body.center_array.copy()
    V = body.vertex_array
    s = V.mean(axis=0)
    reflected = 2 * s - V
    dist = np.abs(reflected[:, None, :] - V[None, :, :]).max(-1).min(1)
    if dist.max() <= tol:
        return s
    return None


def check_symmetric_about(body: ConvexBody, center, tol: float = TOL) -> bool:
    center = np.asarray(center, dtype=float)
    if isinstance(body, Ball):
        return bool(np.abs(body.center_array - center).max() <= tol)
    V = body.vertex_array
    reflected = 2 * center - V
    dist = np.abs(reflected[:, None, :] - V[None, :, :]).max(-1).min(1)
    return bool(dist.max() <= tol)


def facet_normals(body: Polytope) -> np.ndarray:
    """Outward unit facet normals of a polytope (one per facet)."""
    if not isinstance(body, Polytope):
        raise InvalidArgument("facet normals need a polytope")
    if body.dimension == 1:
        return np.array([[1.0], [-1.0]])
    hull = ConvexHull(body.vertex_array)
    normals = hull.equations[:, :-1]
    # qhull may split a facet into coplanar simplices; deduplicate
    out = []
    for n in normals:
        if not any(np.abs(n - m).max() < 1e-9 for m in out):
            out.append(n)
    return np.array(out)


def width(body: ConvexBody, u) -> float:
    u = np.asarray(u, dtype=float)
    return support(body, u) + support(body, -u)
