"""Example families: the sharp simplex construction, touching chains and
depth-k grids."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from . import _lp
from .errors import InternalError, InvalidArgument, PreconditionViolation, WrongTheorem
from .geometry import (
    Ball,
    ConvexBody,
    Family,
    Homothet,
    Polytope,
    centrally_symmetric_center,
)
from .separability import check_nonseparable


@dataclass(frozen=True)
class SharpSimplexInstance:
    d: int
    N: int
    body: Polytope
    family: Family
    # lower corners b of the member cells
    coordinates: Tuple[Tuple[int, ...], ...]
    # side of K over the summed sides of the members
    exact_ratio: Fraction


def sharp_simplex_ratio(d: int, N: int) -> Fraction:
    return Fraction(d * (d + 1) * N // 2 + 1, d * N + 1)


def gen_sharp_simplex(d: int, N: int) -> SharpSimplexInstance:
    """Family of dN + 1 unit corner simplices inside
    K = {x >= 0, sum(x) <= d(d+1)N/2 + 1}.

    Member i sits in the unit cell with lower corner
    b_j = (j N + i) mod (dN + 1), j = 0..d-1.  The family cannot be split by
    a hyperplane parallel to a facet of K and touches every facet, so K is
    its smallest covering homothet, while the members' total size is
    (dN + 1)/(d(d+1)N/2 + 1) of K.
    """
    if d < 2 or N < 1:
        raise InvalidArgument("need d >= 2 and N >= 1")
    side = d * (d + 1) * N // 2 + 1
    body = Polytope([[0] * d] + [[side if i == j else 0 for i in range(d)] for j in range(d)])
    modulus = d * N + 1
    coords = tuple(tuple((j * N + i) % modulus for j in range(d)) for i in range(modulus))
    family = Family(body, [Homothet(b, Fraction(1, side)) for b in coords])

    for j in range(d):
        if sorted(b[j] for b in coords) != list(range(modulus)):
            raise InternalError(f"axis {j} does not run over 0..{d * N}")
    if max(sum(b) for b in coords) != side - 1:
        raise InternalError("members do not reach the slanted facet")
    verdict = check_nonseparable(family, "restricted")
    if not verdict.ok:
        raise InternalError(f"facet-parallel separation found: {verdict.witness}")
    return SharpSimplexInstance(d, N, body, family, coords, sharp_simplex_ratio(d, N))


def _touch_offset(body: ConvexBody, tau_prev, tau, u):
    """Translation x (relative to the previous member) with
    tau_prev K and x + tau K touching, x a positive multiple along u from a
    point where they overlap."""
    if isinstance(body, Ball):
        z = body.center_array
        return (tau_prev - tau) * z + (tau_prev + tau) * float(body.radius) * u
    V = body.vertex_array
    c = V.mean(axis=0)
    # x + tau K meets tau_prev K  <=>  x in tau_prev K - tau K
    diff = (tau_prev * V[:, None, :] - tau * V[None, :, :]).reshape(-1, V.shape[1])
    x0 = (tau_prev - tau) * c
    s = _lp.ray_exit(diff, x0, u)
    if s is None:
        raise InternalError("chain placement lost contact")
    # back off slightly so the two members overlap rather than miss
    s -= 1e-11 * (1.0 + s)
    x = x0 + s * u
    if _lp.hull_residual(diff, x) > 1e-9:
        raise InternalError("placed member does not meet its predecessor")
    return x


def gen_touching_chain(
    body: ConvexBody,
    n: int,
    scales: Sequence = None,
    seed: int = 0,
    collinear: bool = False,
) -> Family:
    """Chain of n homothets, each touching the previous one.

    Directions are random unit vectors from ``seed`` unless ``collinear``, in
    which case every step goes along the first axis.  The union is
    connected, so the family is non-separable.
    """
    if n < 1:
        raise InvalidArgument("chain needs at least one member")
    if scales is None:
        scales = [1] * n
    if len(scales) != n:
        raise InvalidArgument("need one scale per member")
    rng = np.random.default_rng(seed)
    d = body.dimension
    members = [Homothet([0] * d, scales[0])]
    pos = np.zeros(d)
    for tau in scales[1:]:
        if collinear:
            u = np.eye(d)[0]
        else:
            u = rng.normal(size=d)
            u /= np.linalg.norm(u)
        pos = pos + _touch_offset(body, float(members[-1].scale), float(tau), u)
        members.append(Homothet(pos, tau))
    return Family(body, members)


def gen_depth_k_grid(body: ConvexBody, k: int, per_row: int, row_gap: float) -> Family:
    """k rows of ``per_row`` unit translates of a symmetric body.

    Inside a row, consecutive translates are one diameter apart (pitch two
    diameters along the first axis); rows are ``row_gap`` apart along the
    second axis.  A line meeting two rows is then nearly orthogonal to them
    and meets at most one translate per row, and a line meeting a single
    row meets at most ``per_row <= k`` translates.
    """
    if int(k) != k or k < 1:
        raise InvalidArgument("k must be a positive integer")
    if body.dimension != 2:
        # in higher dimensions the plane spanned by the rows meets everything
        raise InvalidArgument("depth grids are planar")
    if centrally_symmetric_center(body) is None:
        raise WrongTheorem("depth grids are built from centrally symmetric bodies")
    if per_row < 1 or per_row > k:
        raise PreconditionViolation(
            f"per_row must lie in 1..k (a row of {per_row} translates has depth {per_row})",
            witness=per_row,
        )
    diam = body.diameter()
    if row_gap < 10 * per_row * diam:
        raise PreconditionViolation(
            f"row_gap {row_gap} < 10 * per_row * diameter = {10 * per_row * diam}",
            witness=row_gap,
        )
    members = [
        Homothet((2 * diam * j, row_gap * r), 1) for r in range(k) for j in range(per_row)
    ]
    return Family(body, members)


def named_body(name: str, d: int = 2) -> ConvexBody:
    """Stock bodies: ``disk``/``ball``, ``square``/``cube``, ``cross``,
    ``simplex``, ``triangle`` (planar standard simplex), ``hexagon``."""
    if name in ("disk", "ball"):
        return Ball([0] * d, 1)
    if name in ("square", "cube"):
        corners = np.array(np.meshgrid(*[[-1, 1]] * d, indexing="ij")).reshape(d, -1).T
        return Polytope(corners.tolist())
    if name == "cross":
        eye = np.eye(d, dtype=int)
        return Polytope(np.vstack([eye, -eye]).tolist())
    if name == "simplex":
        return Polytope([[0] * d] + np.eye(d, dtype=int).tolist())
    if name == "triangle":
        return Polytope([[0, 0], [1, 0], [0, 1]])
    if name == "hexagon":
        t = np.pi / 3 * np.arange(6)
        return Polytope(np.column_stack([np.cos(t), np.sin(t)]))
    raise InvalidArgument(f"unknown body {name!r}")
