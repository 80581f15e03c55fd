"""Random instances and independent oracles shared by the test modules.

The oracles deliberately avoid the LP code paths of the package: polytope
membership goes through qhull half-spaces, planar hull membership through
exact rational orientation predicates.
"""
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
from scipy.spatial import ConvexHull
from scipy.stats import special_ortho_group

from homocover.geometry import Ball, Polytope

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# --------------------------------------------------------------------------
# random bodies


def random_triangle(rng):
    while True:
        P = rng.uniform(-2, 2, size=(3, 2))
        a, b = P[1] - P[0], P[2] - P[0]
        area = 0.5 * abs(a[0] * b[1] - a[1] * b[0])
        if area > 0.3:
            return Polytope(P)


def random_simplex(rng, d):
    while True:
        P = rng.normal(size=(d + 1, d))
        if abs(np.linalg.det(P[1:] - P[0])) > 0.3:
            return Polytope(P)


def random_symmetric_polygon(rng, center=None):
    m = rng.integers(2, 6)
    ang = np.sort(rng.uniform(0, np.pi, m))
    rad = rng.uniform(0.5, 2.0, m)
    P = np.column_stack([rad * np.cos(ang), rad * np.sin(ang)])
    P = np.vstack([P, -P])
    if len(ConvexHull(P).vertices) < 4:
        P = np.vstack([P, [[1.5, 1.5], [-1.5, -1.5]]])
    body = Polytope.from_points(P)
    if center is not None:
        body = Polytope(body.vertex_array + center)
    return body


def random_cross_polytope(rng, d=3):
    Q = special_ortho_group.rvs(d, random_state=rng)
    a = rng.uniform(0.5, 2.0, d)
    V = np.vstack([a[:, None] * Q, -a[:, None] * Q])
    return Polytope(V)


def random_polytope(rng, d):
    while True:
        P = rng.normal(size=(rng.integers(d + 1, 14), d))
        try:
            body = Polytope.from_points(P)
        except Exception:
            continue
        if ConvexHull(body.vertex_array).volume > 0.05:
            return body


def random_asymmetric_polygon(rng):
    """A symmetric polygon with one vertex pushed outward."""
    body = random_symmetric_polygon(rng)
    V = body.vertex_array.copy()
    V[0] *= 1.3
    return Polytope.from_points(V)


def regular_polygon(m, radius=1.0, phase=0.0):
    t = phase + 2 * np.pi * np.arange(m) / m
    return Polytope(radius * np.column_stack([np.cos(t), np.sin(t)]))


def regular_tetrahedron():
    return Polytope([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]])


UNIT_DISK = Ball((0, 0), 1)
TRIANGLE = Polytope([(0, 0), (1, 0), (0, 1)])
SQUARE = Polytope([(1, 1), (-1, 1), (-1, -1), (1, -1)])


# --------------------------------------------------------------------------
# oracles


def halfspaces(body: Polytope):
    """(A, b) with K = {x : A x + b <= 0}."""
    eq = ConvexHull(body.vertex_array).equations
    return eq[:, :-1], eq[:, -1]


def in_scaled_oracle(body, p, c, tol=1e-9):
    """p in c K via half-spaces (polytopes) or distances (balls)."""
    p = np.asarray(p, dtype=float)
    if isinstance(body, Ball):
        return np.linalg.norm(p - c * body.center_array) <= c * float(body.radius) + tol
    A, b = halfspaces(body)
    return bool(np.all(A @ p + c * b <= tol))


def radial_oracle(body, q, u):
    A, b = halfspaces(body)
    q, u = np.asarray(q, float), np.asarray(u, float)
    slope = A @ u
    room = -(A @ q + b)
    pos = slope > 1e-15
    return float((room[pos] / slope[pos]).min())


def asymmetry_oracle(body, q):
    """mu(q) from half-space radial distances."""
    return max(1.0 / radial_oracle(body, q, q - v) for v in body.vertex_array)


def orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def exact_hull_contains(p, points):
    """Exact planar hull membership with Fraction orientation tests."""
    p = tuple(Fraction(x) for x in p)
    pts = sorted({tuple(Fraction(x) for x in q) for q in points})
    if len(pts) == 1:
        return p == pts[0]

    def half(seq):
        h = []
        for q in seq:
            while len(h) >= 2 and orient(h[-2], h[-1], q) <= 0:
                h.pop()
            h.append(q)
        return h

    lower, upper = half(pts), half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2:
        a, b = hull
        if orient(a, b, p) != 0:
            return False
        return min(a, b) <= p <= max(a, b)
    return all(orient(a, b, p) >= 0 for a, b in zip(hull, hull[1:] + hull[:1]))


def boundary_samples(body, count=256):
    """Dense boundary points of a planar body."""
    if isinstance(body, Ball):
        t = 2 * np.pi * np.arange(count) / count
        return body.center_array + float(body.radius) * np.column_stack([np.cos(t), np.sin(t)])
    V = body.vertex_array
    c = V.mean(0)
    V = V[np.argsort(np.arctan2(V[:, 1] - c[1], V[:, 0] - c[0]))]
    per_edge = max(2, count // len(V))
    s = np.linspace(0, 1, per_edge, endpoint=False)[:, None]
    return np.vstack([a + s * (b - a) for a, b in zip(V, np.roll(V, -1, 0))])


# --------------------------------------------------------------------------
# random rational interval families


def _rational(rng, lo, hi, den=97):
    return Fraction(int(rng.integers(lo * den, hi * den + 1)), den)


def random_contiguous_intervals(rng, n=None):
    """Closed segments whose union is a single segment, by construction."""
    n = n or int(rng.integers(2, 21))
    lo = _rational(rng, -10, 10)
    hi = lo + _rational(rng, 0, 3) + Fraction(1, 97)
    out = [(lo, hi)]
    left, reach = lo, hi
    for _ in range(n - 1):
        # start anywhere up to the current reach; end at or past the left end
        a = left - 2 + _rational(rng, 0, 1) * (reach - left + 2)
        b = max(a + _rational(rng, 0, 4) + Fraction(1, 97), left)
        out.append((a, b))
        left, reach = min(left, a), max(reach, b)
    rng.shuffle(out)
    return out


def random_layered_intervals(rng, k, n=None):
    """Segments in at most ``k`` layers of pairwise disjoint open interiors."""
    n = n or int(rng.integers(1, 21))
    layers = [_rational(rng, -10, 0) for _ in range(k)]
    out = []
    for _ in range(n):
        j = int(rng.integers(k))
        # a gap of zero is allowed: touching segments in one layer
        a = layers[j] + _rational(rng, 0, 2) * int(rng.integers(0, 2))
        b = a + _rational(rng, 0, 3) + Fraction(1, 97)
        layers[j] = b
        out.append((a, b))
    rng.shuffle(out)
    return out


def depth_oracle(intervals):
    """Max number of open interiors sharing a point, by probing every cell."""
    pts = sorted({x for iv in intervals for x in iv})
    best = 0
    for a, b in zip(pts, pts[1:]):
        x = (a + b) / 2
        best = max(best, sum(lo < x < hi for lo, hi in intervals))
    return best


def contiguity_oracle(intervals):
    """Union connected iff every point between min and max is covered."""
    pts = sorted({x for iv in intervals for x in iv})
    probes = pts + [(a + b) / 2 for a, b in zip(pts, pts[1:])]
    return all(any(lo <= x <= hi for lo, hi in intervals) for x in probes)


# --------------------------------------------------------------------------
# brute-force separability for disk families


def disk_family(centers, radii):
    from homocover.geometry import Family, Homothet

    return Family(UNIT_DISK, [Homothet(tuple(c), r) for c, r in zip(centers, radii)])


def random_disk_family(rng, n):
    radii = rng.uniform(0.3, 1.5, n)
    centers = rng.uniform(-1.6, 1.6, size=(n, 2))
    return disk_family(centers, radii)


def brute_force_max_gap(family, count=100_000):
    """Widest gap between projected disks over ``count`` equispaced directions
    (0 when every tested projection is connected)."""
    t = np.pi * (np.arange(count) + 0.5) / count
    U = np.column_stack([np.cos(t), np.sin(t)])
    C = family.translations
    R = family.scales * float(family.body.radius)
    mid = U @ C.T
    lo, hi = mid - R, mid + R
    order = np.argsort(lo, axis=1)
    lo = np.take_along_axis(lo, order, 1)
    hi = np.maximum.accumulate(np.take_along_axis(hi, order, 1), axis=1)
    gaps = lo[:, 1:] - hi[:, :-1]
    return max(float(gaps.max(initial=0.0)), 0.0)


# --------------------------------------------------------------------------
# acceptance summary: one line per criterion at the end of the run

ACCEPTANCE = {}


def record_acceptance(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[number] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
