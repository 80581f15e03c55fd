"""Exact one-dimensional segment lemmas and endpoint sweeps.

Everything here runs on exact numbers (``int`` / ``Fraction``; floats are
converted exactly with ``Fraction(x)``), so verdicts have no tolerance.

Two conventions are used and they differ on purpose:

* contiguity (:func:`union_is_contiguous`) treats intervals as **closed**,
  so touching segments form one segment;
* depth (:func:`max_open_depth`, :func:`depth_profile`) counts **open**
  interiors, so a shared endpoint adds nothing.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import InternalError, InvalidArgument, PreconditionViolation


def _exact(x):
    if isinstance(x, (int, Fraction)):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with lo <= hi."""

    lo: object
    hi: object

    def __post_init__(self):
        if self.lo > self.hi:
            raise InvalidArgument(f"interval endpoints out of order: [{self.lo}, {self.hi}]")

    @property
    def length(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def contains(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


class WeightedInterval(Interval):
    """Exact segment of positive length; its weight is its length."""

    def __init__(self, lo, hi):
        lo, hi = _exact(lo), _exact(hi)
        if not lo < hi:
            raise InvalidArgument(f"segments must have positive length: [{lo}, {hi}]")
        super().__init__(lo, hi)

    @property
    def midpoint(self):
        return Fraction(self.lo + self.hi, 2)

    def __repr__(self):
        return f"WeightedInterval({self.lo}, {self.hi})"


@dataclass(frozen=True)
class DepthProfile:
    """Subdivision of the line by all endpoints with open-cover multiplicities.

    ``multiplicities[i]`` is the number of intervals whose interior contains
    the open cell ``(breakpoints[i], breakpoints[i + 1])``.
    """

    breakpoints: Tuple
    multiplicities: Tuple[int, ...]

    def weighted_length(self):
        return sum(
            k * (b - a)
            for k, a, b in zip(self.multiplicities, self.breakpoints, self.breakpoints[1:])
        )

    def weighted_centroid(self):
        """Center of mass of the cells, each with density equal to its multiplicity."""
        num = sum(
            k * (b - a) * Fraction(a + b, 2)
            for k, a, b in zip(self.multiplicities, self.breakpoints, self.breakpoints[1:])
        )
        return num / self.weighted_length()


def _half(x):
    return Fraction(x, 2) if isinstance(x, int) else x / 2


def _as_weighted(intervals) -> List[WeightedInterval]:
    out = []
    for iv in intervals:
        if isinstance(iv, WeightedInterval):
            out.append(iv)
        elif isinstance(iv, Interval):
            out.append(WeightedInterval(iv.lo, iv.hi))
        else:
            lo, hi = iv
            out.append(WeightedInterval(lo, hi))
    return out


def center_of_mass(intervals: Sequence[WeightedInterval]) -> Fraction:
    """Length-weighted mean of the midpoints."""
    intervals = _as_weighted(intervals)
    total = sum(iv.length for iv in intervals)
    return Fraction(sum(iv.length * (iv.lo + iv.hi) for iv in intervals), 2 * total)


def union_is_contiguous(intervals) -> Tuple[bool, Optional[Interval]]:
    """Is the union of the closed intervals a single segment?

    Returns ``(True, None)`` or ``(False, gap)`` with the leftmost maximal
    open gap reported as an :class:`Interval`.
    """
    ivs = sorted(((iv.lo, iv.hi) if isinstance(iv, Interval) else tuple(iv)) for iv in intervals)
    if not ivs:
        return True, None
    reach = ivs[0][1]
    for lo, hi in ivs[1:]:
        if lo > reach:
            return False, Interval(reach, lo)
        if hi > reach:
            reach = hi
    return True, None


def depth_profile(intervals) -> DepthProfile:
    ivs = [((iv.lo, iv.hi) if isinstance(iv, Interval) else tuple(iv)) for iv in intervals]
    if not ivs:
        return DepthProfile((), ())
    points = sorted({x for iv in ivs for x in iv})
    index = {x: i for i, x in enumerate(points)}
    delta = [0] * len(points)
    for lo, hi in ivs:
        if lo < hi:
            delta[index[lo]] += 1
            delta[index[hi]] -= 1
    mult = []
    running = 0
    for step in delta[:-1]:
        running += step
        mult.append(running)
    return DepthProfile(tuple(points), tuple(mult))


def max_open_depth(intervals) -> Tuple[int, Optional[object]]:
    """Largest number of open intervals sharing a point, plus such a point.

    The witness is the midpoint of the leftmost cell attaining the maximum.
    """
    prof = depth_profile(intervals)
    if not prof.multiplicities:
        return 0, None
    best = max(prof.multiplicities)
    i = prof.multiplicities.index(best)
    a, b = prof.breakpoints[i], prof.breakpoints[i + 1]
    return best, _half(a + b)


def goodman_segment_cover(intervals) -> WeightedInterval:
    """Segment of length sum(l_i) centred at the length-weighted center of mass.

    Requires the union of the closed segments to be connected; the returned
    segment then contains that union, which is re-checked exactly.
    """
    intervals = _as_weighted(intervals)
    if not intervals:
        raise InvalidArgument("need at least one segment")
    ok, gap = union_is_contiguous(intervals)
    if not ok:
        raise PreconditionViolation(f"union of segments has a gap {gap}", witness=gap)
    total = sum(iv.length for iv in intervals)
    c = center_of_mass(intervals)
    half = Fraction(total, 2)
    out = WeightedInterval(c - half, c + half)
    hull = Interval(min(iv.lo for iv in intervals), max(iv.hi for iv in intervals))
    if not out.contains(hull):
        raise InternalError(f"cover {out} misses part of the union {hull}")
    return out


def dual_segment_fit(intervals, k: int) -> WeightedInterval:
    """Segment of length sum(l_i)/k centred at the center of mass.

    Requires every point to lie in at most ``k`` open interiors; the result
    then lies inside [min lo, max hi], which is re-checked exactly.
    """
    if int(k) != k or k < 1:
        raise InvalidArgument(f"k must be a positive integer, got {k!r}")
    intervals = _as_weighted(intervals)
    if not intervals:
        raise InvalidArgument("need at least one segment")
    depth, where = max_open_depth(intervals)
    if depth > k:
        raise PreconditionViolation(
            f"point {where} lies in {depth} > {k} interiors", witness=where
        )
    total = sum(iv.length for iv in intervals)
    c = center_of_mass(intervals)
    half = Fraction(total, 2 * k)
    out = WeightedInterval(c - half, c + half)
    hull = Interval(min(iv.lo for iv in intervals), max(iv.hi for iv in intervals))
    if not hull.contains(out):
        raise InternalError(f"fitted segment {out} leaves the hull {hull}")
    return out
