"""Minkowski asymmetry of a convex body.

For an interior point q let mu(q) be the least mu > 0 with
K - q  contained in  -mu (K - q).  The asymmetry parameter is
sigma = min over interior q of mu(q); 1/sigma is Minkowski's measure of
symmetry.  sigma = 1 exactly for centrally symmetric bodies and
sigma <= d always, with equality for simplices.

For a polytope with vertex set V, "K - q inside -mu (K - q)" is the
statement that (1 + mu) q - v lies in mu K for every vertex v.  Writing
q' = (1 + mu) q and expanding each membership with non-negative weights
summing to mu gives a *linear* program in (q', mu, weights), which is what
:func:`minkowski_sigma` solves.  :func:`sigma_feasible` is the fixed-mu
feasibility problem; bisection on it is kept as an independent route.
"""
from dataclasses import dataclass

import numpy as np

from . import _lp
from .errors import InternalError, InvalidArgument
from .geometry import TOL, Ball, ConvexBody, Polytope, is_interior


@dataclass(frozen=True)
class AsymmetryResult:
    sigma: float
    center: np.ndarray
    iterations: int
    # width of the certified bracket [lower, upper] around sigma
    certified_gap: float


def radial_scale(body: ConvexBody, q, direction) -> float:
    """Largest t >= 0 with q + t * direction in K, for q strictly inside K."""
    q = np.asarray(q, dtype=float)
    u = np.asarray(direction, dtype=float)
    if not np.any(u):
        raise InvalidArgument("direction must be non-zero")
    if not is_interior(body, q):
        raise InvalidArgument(f"point {q} is not strictly inside the body")
    return _radial(body, q, u)


def _radial(body, q, u):
    if isinstance(body, Ball):
        w = q - body.center_array
        a = u @ u
        b = 2 * (w @ u)
        c = w @ w - float(body.radius) ** 2
        return float((-b + np.sqrt(b * b - 4 * a * c)) / (2 * a))
    t = _lp.ray_exit(body.vertex_array, q, u)
    if t is None:
        raise InternalError("ray origin left the polytope")
    return t


def asymmetry_at_point(body: ConvexBody, q) -> float:
    """Least mu with K - q contained in -mu (K - q)."""
    q = np.asarray(q, dtype=float)
    if not is_interior(body, q):
        raise InvalidArgument(f"point {q} is not strictly inside the body")
    if isinstance(body, Ball):
        r = float(body.radius)
        e = float(np.linalg.norm(body.center_array - q))
        return (r + e) / (r - e)
    # vertex v must be matched by the point q - (v - q)/mu of K
    return max(1.0 / _radial(body, q, q - v) for v in body.vertex_array)


def sigma_feasible(body: Polytope, mu: float):
    """Is there q with (1 + mu) q - v in mu K for every vertex v?

    Returns ``(feasible, q)``; q is None when infeasible.
    """
    V = body.vertex_array
    m, d = V.shape
    mu = float(mu)
    # variables: q (d, free), lam (m*m >= 0); row block per vertex v:
    #   (1 + mu) q - mu * sum_w lam[v, w] w = v ,  sum_w lam[v, w] = 1
    nvar = d + m * m
    A = np.zeros((m * (d + 1), nvar))
    b = np.zeros(m * (d + 1))
    for i in range(m):
        rows = slice(i * (d + 1), i * (d + 1) + d)
        A[rows, :d] = (1 + mu) * np.eye(d)
        A[rows, d + i * m : d + (i + 1) * m] = -mu * V.T
        b[rows] = V[i]
        A[i * (d + 1) + d, d + i * m : d + (i + 1) * m] = 1.0
        b[i * (d + 1) + d] = 1.0
    bounds = [(None, None)] * d + [(0, None)] * (m * m)
    res = _lp.solve(np.zeros(nvar), A_eq=A, b_eq=b, bounds=bounds)
    if res.status == 0:
        return True, res.x[:d].copy()
    if res.status == 2:
        return False, None
    raise InternalError(f"feasibility LP failed at mu={mu}: {res.message}")


def _sigma_lp(body: Polytope):
    V = body.vertex_array
    m, d = V.shape
    # variables: qp (d, free), mu, lam (m*m >= 0); minimize mu subject to
    #   qp - sum_w lam[v, w] w = v ,  sum_w lam[v, w] - mu = 0
    nvar = d + 1 + m * m
    c = np.zeros(nvar)
    c[d] = 1.0
    A = np.zeros((m * (d + 1), nvar))
    b = np.zeros(m * (d + 1))
    for i in range(m):
        rows = slice(i * (d + 1), i * (d + 1) + d)
        cols = slice(d + 1 + i * m, d + 1 + (i + 1) * m)
        A[rows, :d] = np.eye(d)
        A[rows, cols] = -V.T
        b[rows] = V[i]
        A[i * (d + 1) + d, cols] = 1.0
        A[i * (d + 1) + d, d] = -1.0
    bounds = [(None, None)] * d + [(1.0, None)] + [(0, None)] * (m * m)
    res = _lp.solve(c, A_eq=A, b_eq=b, bounds=bounds)
    if res.status != 0:
        raise InternalError(f"asymmetry LP failed: {res.message}")
    mu = float(res.x[d])
    return mu, res.x[:d] / (1 + mu), int(res.nit)


def minkowski_sigma(body: ConvexBody, method: str = "lp", tol: float = TOL) -> AsymmetryResult:
    """Asymmetry parameter sigma and a center attaining it.

    ``method="lp"`` solves the linearized program once; the reported gap is
    ``asymmetry_at_point(center) - sigma``, an a-posteriori certificate.
    ``method="bisect"`` bisects ``sigma_feasible`` on [1, d] until the
    bracket is narrower than ``tol``.
    """
    if isinstance(body, Ball):
        return AsymmetryResult(1.0, body.center_array.copy(), 0, 0.0)
    d = body.dimension
    if method == "lp":
        sigma, q, nit = _sigma_lp(body)
        if sigma > d + 1e-6:
            raise InternalError(f"sigma = {sigma} exceeds the dimension bound {d}")
        upper = asymmetry_at_point(body, q)
        return AsymmetryResult(sigma, q, nit, max(upper - sigma, 0.0))
    if method != "bisect":
        raise InvalidArgument(f"unknown method {method!r}")

    ok, q_hi = sigma_feasible(body, d)
    if not ok:
        raise InternalError(f"infeasible at mu = d = {d}; contradicts sigma <= d")
    ok, q1 = sigma_feasible(body, 1.0)
    if ok:
        return AsymmetryResult(1.0, q1, 1, 0.0)
    lo, hi = 1.0, float(d)
    iterations = 2
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        ok, q = sigma_feasible(body, mid)
        iterations += 1
        if ok:
            hi, q_hi = mid, q
        else:
            lo = mid
    return AsymmetryResult(0.5 * (lo + hi), q_hi, iterations, hi - lo)
