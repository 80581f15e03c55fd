"""Non-separability and depth-k checks for families of homothets.

A family is non-separable when every hyperplane meeting the convex hull of
the union meets some member; along a direction u this says the projected
closed intervals have a connected union.  The depth-k condition asks that
no hyperplane meets more than k member interiors; along u it bounds the
open-interval depth of the projections.

Projections are computed in floating point and then snapped to the grid
``1 / GRID`` before the exact sweep.  Snapping is conservative for each
question: contiguity rounds intervals outward and depth rounds them inward,
so gaps or overlaps below 1e-12 are treated as touching.

In the plane both questions can only change verdict at finitely many
directions, where two projected endpoints of different members coincide.
:func:`critical_directions_2d` enumerates those events plus one direction
inside every arc between consecutive events, which makes ``exact-2d`` mode
sound and complete.  Above two dimensions the all-directions quantifier is
sampled.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from .errors import InvalidArgument, UnsupportedDimension
from .geometry import Ball, Family, Polytope, facet_normals, project_family
from .intervals import max_open_depth, union_is_contiguous

GRID = 10 ** 12

SATISFIED = "satisfied"
VIOLATED = "violated"
SATISFIED_PROBABILISTIC = "satisfied-probabilistic"


@dataclass(frozen=True)
class DirectionSet:
    """Unit directions to test, tagged with where they came from.

    For ``critical-2d`` sets, ``events`` holds the event directions and
    ``samples`` one direction strictly inside each arc between events.
    """

    events: np.ndarray
    samples: np.ndarray = field(default_factory=lambda: np.zeros((0, 2)))
    provenance: str = "given"

    def __post_init__(self):
        for name in ("events", "samples"):
            arr = np.atleast_2d(np.asarray(getattr(self, name), dtype=float))
            if arr.size and not np.allclose(np.linalg.norm(arr, axis=1), 1.0, atol=1e-9):
                raise InvalidArgument("direction sets hold unit vectors only")
            object.__setattr__(self, name, arr)

    @property
    def vectors(self) -> np.ndarray:
        parts = [a for a in (self.events, self.samples) if a.size]
        if not parts:
            return np.zeros((0, 0))
        return np.vstack(parts)

    def __len__(self):
        return len(self.vectors)

    @classmethod
    def of(cls, vectors, provenance="given"):
        V = np.atleast_2d(np.asarray(vectors, dtype=float))
        V = V / np.linalg.norm(V, axis=1, keepdims=True)
        return cls(V, np.zeros((0, V.shape[1])), provenance)


@dataclass(frozen=True)
class SeparationVerdict:
    status: str
    # (direction, offset) of a hyperplane <x, u> = offset proving violation
    witness: Optional[Tuple[Tuple[float, ...], float]]
    directions_tested: int
    mode: str
    max_depth: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.status != VIOLATED


def _outward(lo, hi):
    return [(math.floor(a * GRID), math.ceil(b * GRID)) for a, b in zip(lo, hi)]


def _inward(lo, hi):
    out = []
    for a, b in zip(lo, hi):
        a, b = math.ceil(a * GRID), math.floor(b * GRID)
        if a < b:
            out.append((a, b))
    return out


def _gap(family: Family, u):
    """Leftmost gap of the projected union along u, as float (lo, hi), or None."""
    lo, hi = project_family(family, u)
    ok, gap = union_is_contiguous(_outward(lo, hi))
    if ok:
        return None
    return gap.lo / GRID, gap.hi / GRID


def nonseparable_in_direction(family: Family, u) -> bool:
    """True iff the closed projections onto ``u`` have a connected union."""
    return _gap(family, u) is None


def _depth(family: Family, u):
    lo, hi = project_family(family, u)
    depth, where = max_open_depth(_inward(lo, hi))
    return depth, (None if where is None else float(Fraction(where, GRID)))


def depth_in_direction(family: Family, u) -> int:
    """Largest number of member interiors met by a hyperplane orthogonal to ``u``."""
    return _depth(family, u)[0]


# ----------------------------------------------------------------------------
# critical directions in the plane


def _solve_cos_sin(a, b, c):
    """Angles theta with a cos(theta) + b sin(theta) = c."""
    r = math.hypot(a, b)
    if r == 0 or abs(c) > r:
        return []
    phi = math.atan2(b, a)
    delta = math.acos(max(-1.0, min(1.0, c / r)))
    return [phi + delta, phi - delta]


def critical_directions_2d(family: Family) -> DirectionSet:
    """Directions where projected endpoints of two members can coincide,
    plus one sample strictly inside each arc between them.

    Directions u and -u give mirror-image verdicts, so angles are reduced to
    [0, pi).
    """
    if family.dimension != 2:
        raise UnsupportedDimension("critical directions are defined in the plane only")
    n = len(family)
    angles = []
    if isinstance(family.body, Ball):
        centers = family.translations + family.scales[:, None] * family.body.center_array
        radii = family.scales * float(family.body.radius)
        for i in range(n):
            for j in range(i + 1, n):
                a, b = centers[i] - centers[j]
                for c in (
                    radii[i] + radii[j],
                    radii[i] - radii[j],
                    -radii[i] + radii[j],
                    -radii[i] - radii[j],
                ):
                    angles.extend(_solve_cos_sin(a, b, c))
    else:
        pts = family.member_vertices().reshape(-1, 2)
        owner = np.repeat(np.arange(n), len(family.body.vertices))
        i, j = np.triu_indices(len(pts), k=1)
        keep = owner[i] != owner[j]
        diff = pts[j[keep]] - pts[i[keep]]
        nonzero = np.abs(diff).max(axis=1) > 0
        diff = diff[nonzero]
        # directions orthogonal to each difference vector
        angles.extend(np.arctan2(diff[:, 0], -diff[:, 1]).tolist())
    events = np.unique(np.round(np.mod(angles, np.pi), 15)) if angles else np.zeros(0)
    if len(events) == 0:
        samples = np.array([0.0])
    else:
        nxt = np.append(events[1:], events[0] + np.pi)
        samples = np.mod(0.5 * (events + nxt), np.pi)
    as_vec = lambda t: np.column_stack([np.cos(t), np.sin(t)])  # noqa: E731
    return DirectionSet(
        as_vec(events) if len(events) else np.zeros((0, 2)),
        as_vec(samples),
        "critical-2d",
    )


def sampled_directions(dimension: int, count: int, seed: int = 0) -> DirectionSet:
    """Pseudo-random unit vectors (normalized Gaussians), deterministic per seed."""
    rng = np.random.default_rng(seed)
    U = rng.normal(size=(count, dimension))
    U /= np.linalg.norm(U, axis=1, keepdims=True)
    return DirectionSet(U, np.zeros((0, dimension)), f"sampled(seed={seed}, count={count})")


def facet_directions(family: Family) -> DirectionSet:
    """Facet normals of a polytope body; these realize the restricted
    (facet-parallel hyperplanes) version of the hypotheses."""
    if not isinstance(family.body, Polytope):
        raise InvalidArgument("facet directions need a polytope body")
    return DirectionSet(facet_normals(family.body), np.zeros((0, family.dimension)), "facet-normals")


def _resolve(family: Family, mode, count, seed, directions):
    if mode in ("exact-2d", "exact2d"):
        return "exact-2d", critical_directions_2d(family)
    if mode == "restricted":
        if directions is None:
            directions = facet_directions(family)
        elif not isinstance(directions, DirectionSet):
            directions = DirectionSet.of(directions, "given")
        return "restricted", directions
    if mode == "sampled":
        return "sampled", sampled_directions(family.dimension, count, seed)
    raise InvalidArgument(f"unknown mode {mode!r}")


def default_mode(family: Family) -> str:
    return "exact-2d" if family.dimension == 2 else "sampled"


def check_nonseparable(
    family: Family, mode: str = None, *, directions=None, count: int = 4096, seed: int = 0
) -> SeparationVerdict:
    """Decide non-separability.

    ``mode`` is ``"exact-2d"`` (planar families, complete), ``"restricted"``
    (only ``directions``, facet normals by default) or ``"sampled"``
    (``count`` random directions from ``seed``).
    """
    mode, dset = _resolve(family, mode or default_mode(family), count, seed, directions)
    U = dset.vectors
    for u in U:
        gap = _gap(family, u)
        if gap is not None:
            offset = 0.5 * (gap[0] + gap[1])
            return SeparationVerdict(VIOLATED, (tuple(u.tolist()), offset), len(U), mode)
    status = SATISFIED_PROBABILISTIC if mode == "sampled" else SATISFIED
    return SeparationVerdict(status, None, len(U), mode)


def check_depth_at_most_k(
    family: Family, k: int, mode: str = None, *, directions=None, count: int = 4096, seed: int = 0
) -> SeparationVerdict:
    """Decide whether every hyperplane meets at most ``k`` member interiors."""
    if int(k) != k or k < 1:
        raise InvalidArgument(f"k must be a positive integer, got {k!r}")
    mode, dset = _resolve(family, mode or default_mode(family), count, seed, directions)
    U = dset.vectors
    best = 0
    for u in U:
        depth, where = _depth(family, u)
        best = max(best, depth)
        if depth > k:
            return SeparationVerdict(
                VIOLATED, (tuple(u.tolist()), where), len(U), mode, max_depth=depth
            )
    status = SATISFIED_PROBABILISTIC if mode == "sampled" else SATISFIED
    return SeparationVerdict(status, None, len(U), mode, max_depth=best)


def witness_separates(family: Family, witness) -> bool:
    """Re-check a separation witness from the float projections alone: the
    hyperplane misses every member yet cuts the hull of the union."""
    u, offset = witness
    lo, hi = project_family(family, np.asarray(u, dtype=float))
    misses = np.all((hi < offset) | (lo > offset))
    return bool(misses and lo.min() < offset < hi.max())


def witness_depth(family: Family, witness) -> int:
    """Number of member interiors met by the witness hyperplane."""
    u, offset = witness
    lo, hi = project_family(family, np.asarray(u, dtype=float))
    return int(np.sum((lo < offset) & (offset < hi)))
