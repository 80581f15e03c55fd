"""Thin wrappers around ``scipy.optimize.linprog`` for the small dense LPs
used throughout the package (hull membership, radial distances, asymmetry).
"""
import numpy as np
from scipy.optimize import linprog

from .errors import InternalError

_OPTIONS = {
    "primal_feasibility_tolerance": 1e-10,
    "dual_feasibility_tolerance": 1e-10,
}


def solve(c, A_ub=None, b_ub=None, A_eq=None, b_eq=None, bounds=(0, None)):
    """Run HiGHS with tight tolerances.  Returns the scipy result object."""
    return linprog(
        c,
        A_ub=A_ub,
        b_ub=b_ub,
        A_eq=A_eq,
        b_eq=b_eq,
        bounds=bounds,
        method="highs",
        options=_OPTIONS,
    )


def hull_residual(points, target):
    """Smallest L-infinity distance from ``target`` to conv(points).

    The value returned is recomputed from the LP's weights after projecting
    them back onto the simplex, so it is an honest upper bound on the
    distance even if the solver is slightly inaccurate.
    """
    P = np.asarray(points, dtype=float)
    p = np.asarray(target, dtype=float)
    m, d = P.shape
    # variables: lambda (m), eps
    c = np.zeros(m + 1)
    c[-1] = 1.0
    A_ub = np.zeros((2 * d, m + 1))
    A_ub[:d, :m] = P.T
    A_ub[:d, -1] = -1.0
    A_ub[d:, :m] = -P.T
    A_ub[d:, -1] = -1.0
    b_ub = np.concatenate([p, -p])
    A_eq = np.zeros((1, m + 1))
    A_eq[0, :m] = 1.0
    res = solve(c, A_ub, b_ub, A_eq, [1.0])
    if res.status != 0:
        raise InternalError(f"hull residual LP failed: {res.message}")
    lam = np.clip(res.x[:m], 0.0, None)
    lam /= lam.sum()
    return float(np.max(np.abs(P.T @ lam - p)))


def interior_margin(points, target):
    """Largest s such that target = sum(lam_i p_i) with every lam_i >= s.

    Positive iff ``target`` lies in the relative interior of the hull;
    returns -inf when ``target`` is outside the hull.
    """
    P = np.asarray(points, dtype=float)
    p = np.asarray(target, dtype=float)
    m, d = P.shape
    # variables: lambda (m), s ; maximize s
    c = np.zeros(m + 1)
    c[-1] = -1.0
    A_eq = np.zeros((d + 1, m + 1))
    A_eq[:d, :m] = P.T
    A_eq[d, :m] = 1.0
    b_eq = np.concatenate([p, [1.0]])
    A_ub = np.zeros((m, m + 1))
    A_ub[:, :m] = -np.eye(m)
    A_ub[:, -1] = 1.0
    bounds = [(0, None)] * m + [(None, 1.0)]
    res = solve(c, A_ub, np.zeros(m), A_eq, b_eq, bounds)
    if res.status == 2:
        return -np.inf
    if res.status != 0:
        raise InternalError(f"interior margin LP failed: {res.message}")
    return float(res.x[-1])


def ray_exit(points, origin, direction):
    """Max t >= 0 with origin + t*direction in conv(points), or None if
    ``origin`` is not in the hull."""
    P = np.asarray(points, dtype=float)
    q = np.asarray(origin, dtype=float)
    u = np.asarray(direction, dtype=float)
    m, d = P.shape
    # variables: lambda (m), t ; maximize t
    c = np.zeros(m + 1)
    c[-1] = -1.0
    A_eq = np.zeros((d + 1, m + 1))
    A_eq[:d, :m] = P.T
    A_eq[:d, -1] = -u
    A_eq[d, :m] = 1.0
    b_eq = np.concatenate([q, [1.0]])
    res = solve(c, A_eq=A_eq, b_eq=b_eq)
    if res.status == 2:
        return None
    if res.status != 0:
        raise InternalError(f"ray exit LP failed: {res.message}")
    return float(res.x[-1])
