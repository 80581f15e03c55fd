"""Covering homothets for families of homothets of a convex body.

Every constructor places the cover at the scale-weighted center of the
family (after moving K's reference point to the appropriate center) and
scales K by a theorem-specific factor times the total homothety
coefficient:

=====================  ===========================  ==============================
theorem tag            reference point of K         factor
=====================  ===========================  ==============================
``balls``              center of the ball           1
``symmetric``          center of symmetry           1
``general-sigma``      Minkowski center q*          (sigma + 1) / 2
``simplex-facet``      centroid of the simplex      (d + 1) / 2
=====================  ===========================  ==============================

The covers are the ones the covering arguments produce, not the smallest
ones; :func:`minimal_cover` computes the latter so tightness can be
measured.  Containment is checked with the erosion identity
``o + tau K  inside  t + T K  <=>  o - t  in  (T - tau) K``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import minimize

from . import _lp
from .asymmetry import asymmetry_at_point, minkowski_sigma
from .errors import InternalError, WrongTheorem
from .geometry import (
    TOL,
    Ball,
    Family,
    Homothet,
    Polytope,
    centroid,
    centrally_symmetric_center,
    check_symmetric_about,
    is_exact,
    member_scaled,
)
from .separability import DirectionSet, check_nonseparable


@dataclass(frozen=True)
class CoverResult:
    cover: Homothet
    theorem: str
    # reference point of K used as the homothety center
    normalization: np.ndarray
    factor: object
    verified: bool
    sigma: Optional[float] = None
    warnings: Tuple[str, ...] = field(default=())

    @property
    def scale(self):
        return self.cover.scale


@dataclass(frozen=True)
class MinimalCover:
    scale: float
    translation: np.ndarray
    # spread of the best objective values across restarts (ball bodies);
    # None for the exact LP route
    gap: Optional[float] = None


def _times(factor, total):
    if is_exact(factor) and is_exact(total):
        return Fraction(factor) * Fraction(total)
    return float(factor) * float(total)


def _all_exact(values) -> bool:
    return all(is_exact(x) for x in values)


def centered_cover(family: Family, reference, factor) -> Homothet:
    """Homothet ``factor * sum(tau_i)`` of K whose point ``reference`` (a
    point of K) sits at the scale-weighted center of the family.

    This is the common placement of every covering construction; it is
    public so that other factors can be tried at the same placement.

    Exact inputs (integer or rational translations, scales, reference point
    and factor) give an exact cover.
    """
    T = _times(factor, family.total_scale())
    taus = [m.scale for m in family.members]
    exact = (
        _all_exact(reference)
        and _all_exact(taus)
        and is_exact(T)
        and all(_all_exact(m.translation) for m in family.members)
    )
    if exact:
        # members o_i + tau_i K = (o_i + tau_i ref) + tau_i (K - ref)
        total = sum(Fraction(t) for t in taus)
        center = [
            sum(Fraction(t) * (o + t * r) for t, o in zip(taus, coord)) / total
            for r, coord in zip(reference, zip(*(m.translation for m in family.members)))
        ]
        return Homothet(tuple(c - T * r for c, r in zip(center, reference)), T)
    ref = np.asarray([float(x) for x in reference])
    adjusted = family.translations + family.scales[:, None] * ref
    w = family.scales
    center = (w[:, None] * adjusted).sum(0) / w.sum()
    return Homothet(center - float(T) * ref, T)


def _hypothesis_warnings(family: Family) -> Tuple[str, ...]:
    if isinstance(family.body, Polytope):
        verdict = check_nonseparable(family, "restricted")
    else:
        axes = DirectionSet(np.eye(family.dimension), provenance="axes")
        verdict = check_nonseparable(family, "restricted", directions=axes)
    if verdict.ok:
        return ()
    u, offset = verdict.witness
    u = [float(x) + 0.0 for x in np.round(u, 12)]
    return (
        f"family is separable: hyperplane <x, {u}> = {offset:.12g} "
        "misses every member",
    )


def _result(family, cover, theorem, reference, factor, sigma=None):
    return CoverResult(
        cover=cover,
        theorem=theorem,
        normalization=np.asarray(reference, dtype=float),
        factor=factor,
        verified=verify_cover(family, cover),
        sigma=sigma,
        warnings=_hypothesis_warnings(family),
    )


def cover_balls(family: Family) -> CoverResult:
    """Ball of radius sum(r_i) centred at the radius-weighted mean of centers."""
    if not isinstance(family.body, Ball):
        raise WrongTheorem("cover_balls needs a ball body; use cover_symmetric or cover_general")
    ref = family.body.center
    return _result(family, centered_cover(family, ref, 1), "balls", ref, 1)


def cover_symmetric(family: Family, symmetry_center=None) -> CoverResult:
    """Translate of sum(tau_i) K for a centrally symmetric body."""
    body = family.body
    if symmetry_center is None:
        symmetry_center = centrally_symmetric_center(body)
        if symmetry_center is None:
            raise WrongTheorem("body is not centrally symmetric; use cover_general")
        if isinstance(body, Ball):
            symmetry_center = body.center
        elif all(_all_exact(v) for v in body.vertices):
            m = len(body.vertices)
            symmetry_center = tuple(sum(Fraction(x) for x in col) / m for col in zip(*body.vertices))
    elif not check_symmetric_about(body, symmetry_center):
        raise WrongTheorem(f"body is not symmetric about {list(symmetry_center)}")
    cover = centered_cover(family, symmetry_center, 1)
    return _result(family, cover, "symmetric", symmetry_center, 1, sigma=1.0)


def cover_general(family: Family) -> CoverResult:
    """Translate of (sigma + 1)/2 * sum(tau_i) K for an arbitrary body.

    The factor uses the certified asymmetry at the computed center, which
    is never below the true sigma.
    """
    res = minkowski_sigma(family.body)
    sigma = res.sigma
    if isinstance(family.body, Polytope):
        sigma = max(sigma, asymmetry_at_point(family.body, res.center))
    factor = (sigma + 1.0) / 2.0
    cover = centered_cover(family, res.center, factor)
    return _result(family, cover, "general-sigma", res.center, factor, sigma=sigma)


def cover_simplex_facet_parallel(family: Family) -> CoverResult:
    """Translate of (d + 1)/2 * sum(tau_i) K for a simplex body, placed by
    the simplex centroid.  Only facet-parallel separation needs to be ruled
    out for this cover to work."""
    body = family.body
    if not (isinstance(body, Polytope) and body.is_simplex):
        raise WrongTheorem("cover_simplex_facet_parallel needs a simplex body")
    d = family.dimension
    factor = Fraction(d + 1, 2)
    if all(_all_exact(v) for v in body.vertices):
        ref = tuple(sum(Fraction(v[j]) for v in body.vertices) / (d + 1) for j in range(d))
    else:
        factor = float(factor)
        ref = centroid(body)
    cover = centered_cover(family, ref, factor)
    return _result(family, cover, "simplex-facet", ref, factor, sigma=float(d))


def verify_cover(family: Family, cover: Homothet, tol: float = TOL) -> bool:
    """Does ``cover`` (a homothet of the same body) contain every member?"""
    T = float(cover.scale)
    t = cover.translation_array
    if T < family.scales.max() - tol:
        return False
    return all(
        member_scaled(o - t, max(T - tau, 0.0), family.body, tol)
        for o, tau in zip(family.translations, family.scales)
    )


def ball_cover_slack(family: Family, cover: Homothet) -> float:
    """min over members of (cover radius - farthest member point distance)."""
    if not isinstance(family.body, Ball):
        raise WrongTheorem("slack is measured for ball bodies")
    z = family.body.center_array
    r = float(family.body.radius)
    C = cover.translation_array + float(cover.scale) * z
    centers = family.translations + family.scales[:, None] * z
    far = np.linalg.norm(centers - C, axis=1) + family.scales * r
    return float(float(cover.scale) * r - far.max())


def minimal_cover(family: Family, restarts: int = 20, seed: int = 0) -> MinimalCover:
    """Smallest homothet t + T K containing every member.

    Polytope bodies: one LP in (T, t, weights) using the erosion identity.
    Ball bodies: minimize max_i |C_i - x| + R_i with SLSQP on the epigraph
    from ``restarts`` starting points.
    """
    if isinstance(family.body, Polytope):
        return _minimal_cover_lp(family)
    return _minimal_cover_balls(family, restarts, seed)


def _minimal_cover_lp(family: Family) -> MinimalCover:
    V = family.body.vertex_array
    m, d = V.shape
    n = len(family)
    # variables: T, t (d, free), lam (n*m >= 0)
    #   t + sum_w lam[i, w] w = o_i ,  sum_w lam[i, w] - T = -tau_i
    nvar = 1 + d + n * m
    c = np.zeros(nvar)
    c[0] = 1.0
    A = np.zeros((n * (d + 1), nvar))
    b = np.zeros(n * (d + 1))
    for i, (o, tau) in enumerate(zip(family.translations, family.scales)):
        r0 = i * (d + 1)
        cols = slice(1 + d + i * m, 1 + d + (i + 1) * m)
        A[r0 : r0 + d, 1 : 1 + d] = np.eye(d)
        A[r0 : r0 + d, cols] = V.T
        b[r0 : r0 + d] = o
        A[r0 + d, cols] = 1.0
        A[r0 + d, 0] = -1.0
        b[r0 + d] = -tau
    bounds = [(0, None)] + [(None, None)] * d + [(0, None)] * (n * m)
    res = _lp.solve(c, A_eq=A, b_eq=b, bounds=bounds)
    if res.status != 0:
        raise InternalError(f"minimal cover LP failed: {res.message}")
    return MinimalCover(float(res.x[0]), res.x[1 : 1 + d].copy())


def _minimal_cover_balls(family: Family, restarts: int, seed: int) -> MinimalCover:
    z = family.body.center_array
    r = float(family.body.radius)
    centers = family.translations + family.scales[:, None] * z
    radii = family.scales * r
    d = family.dimension

    def objective(x):
        return float((np.linalg.norm(centers - x, axis=1) + radii).max())

    if len(family) == 1:
        x, val = centers[0].copy(), radii[0]
    else:
        rng = np.random.default_rng(seed)
        lo, hi = centers.min(0), centers.max(0)
        starts = [(radii[:, None] * centers).sum(0) / radii.sum()]
        starts += [rng.uniform(lo, hi) for _ in range(max(restarts, 1) - 1)]
        cons = {
            "type": "ineq",
            "fun": lambda v: v[-1] - np.linalg.norm(centers - v[:-1], axis=1) - radii,
        }
        found = []
        for s in starts:
            v0 = np.append(s, objective(s))
            res = minimize(
                lambda v: v[-1],
                v0,
                jac=lambda v: np.eye(d + 1)[-1],
                constraints=[cons],
                method="SLSQP",
                options={"ftol": 1e-14, "maxiter": 500},
            )
            found.append((objective(res.x[:-1]), res.x[:-1]))
        found.sort(key=lambda p: p[0])
        val, x = found[0]
        spread = found[min(len(found) - 1, len(found) // 2)][0] - val
    T = val / r
    gap = 0.0 if len(family) == 1 else float(spread)
    return MinimalCover(float(T), x - T * z, gap)
