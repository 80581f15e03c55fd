"""Inscribing a homothet into the convex hull of a family.

If every hyperplane meets at most k member interiors and K is centrally
symmetric, the homothet (sum(tau_i) / k) K placed at the scale-weighted
center lies inside conv(union of members).
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidArgument, WrongTheorem
from .geometry import (
    TOL,
    Ball,
    Family,
    Homothet,
    centrally_symmetric_center,
    hull_contains_point,
    is_exact,
    support_many,
)

EXACT_VERTEX = "exact-vertex"


@dataclass(frozen=True)
class InscribeResult:
    inscribed: Homothet
    k: int
    verified: bool
    verification: str


def sphere_directions(dimension: int, count: int = 4096) -> np.ndarray:
    """Evenly spread unit vectors: equal angles in 2-D, a Fibonacci lattice in 3-D."""
    if dimension == 1:
        return np.array([[1.0], [-1.0]])
    if dimension == 2:
        t = 2 * np.pi * np.arange(count) / count
        return np.column_stack([np.cos(t), np.sin(t)])
    if dimension == 3:
        i = np.arange(count) + 0.5
        z = 1 - 2 * i / count
        phi = np.pi * (1 + 5 ** 0.5) * i
        rho = np.sqrt(1 - z * z)
        return np.column_stack([rho * np.cos(phi), rho * np.sin(phi), z])
    rng = np.random.default_rng(0)
    U = rng.normal(size=(count, dimension))
    return U / np.linalg.norm(U, axis=1, keepdims=True)


def inscribe_dual(family: Family, k: int, tol: float = TOL, directions: int = 4096) -> InscribeResult:
    """Place (sum(tau_i)/k) K at the scale-weighted center and verify the fit."""
    if int(k) != k or k < 1:
        raise InvalidArgument(f"k must be a positive integer, got {k!r}")
    k = int(k)
    s = centrally_symmetric_center(family.body)
    if s is None:
        raise WrongTheorem("inscribing needs a centrally symmetric body")
    total = family.total_scale()
    scale = Fraction(total) / k if is_exact(total) else float(total) / k
    # with K re-centred at s, members are (o_i + tau_i s) + tau_i (K - s)
    adjusted = family.translations + family.scales[:, None] * s
    w = family.scales
    center = (w[:, None] * adjusted).sum(0) / w.sum()
    inscribed = Homothet(center - float(scale) * s, scale)
    if isinstance(family.body, Ball):
        ok = verify_inscribed(inscribed, family, directions=directions)
        mode = f"sampled-support({directions})"
    else:
        ok = verify_inscribed(inscribed, family, tol=tol)
        mode = EXACT_VERTEX
    return InscribeResult(inscribed, k, ok, mode)


def inscribed_support_margin(inscribed: Homothet, family: Family, directions=4096) -> float:
    """min over directions u of h_hull(u) - h_inscribed(u).

    The hull's support function is the max of the members' ones.
    """
    U = directions
    if np.isscalar(directions):
        U = sphere_directions(family.dimension, int(directions))
    U = np.asarray(U, dtype=float)
    h = support_many(family.body, U)
    members = family.translations @ U.T + family.scales[:, None] * h[None, :]
    hull = members.max(axis=0)
    inner = inscribed.translation_array @ U.T + float(inscribed.scale) * h
    return float((hull - inner).min())


def verify_inscribed(
    inscribed: Homothet, family: Family, tol: float = None, directions=4096
) -> bool:
    """Does ``inscribed`` lie in conv(union of members)?

    Polytope bodies: every vertex of ``inscribed`` is tested against the hull
    of all member vertices (tolerance 1e-9).  Ball bodies: support-function
    dominance on a sampled direction set (tolerance 1e-7); that verdict is
    only as good as the sample.
    """
    if isinstance(family.body, Ball):
        tol = 1e-7 if tol is None else tol
        return inscribed_support_margin(inscribed, family, directions) >= -tol
    tol = TOL if tol is None else tol
    V = family.body.vertex_array
    pts = family.member_vertices().reshape(-1, family.dimension)
    inner = inscribed.translation_array + float(inscribed.scale) * V
    return all(hull_contains_point(p, pts, tol) for p in inner)
