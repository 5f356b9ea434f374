"""Edge-normal invariants of spanning lattice-convex planar sets.

For such a set K:

* the outer edge normals are the primitive outward normals of the hull
  edges (every hull edge carries at least two points of K);
* m_prime is the least point count over the edges;
* m_doubleprime is the least value of |F(K,u)| - |F(K,-u)| + 1 over
  directions u where an edge faces a strictly shorter opposite edge
  (both with more than one point), or infinity when no such pair exists;
* the discrepancy delta is max/min of the nonzero absolute determinants
  of pairs of normals.

All of these are recoverable from the covariogram alone, and the
certificate m >= delta^2 + delta + 1 forces the covariogram to determine
K up to translation and point reflection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import inf

from .lattice import (
    LatticeError,
    convex_hull,
    det2,
    is_lattice_convex,
    point_set,
    spans_plane,
    support_set,
    vneg,
)


@dataclass(frozen=True)
class InvariantRecord:
    """Covariogram-determined invariants of a spanning lattice-convex set.

    normals holds the outer edge normals of K and of -K together, so it
    is closed under negation.  m_prime, m_doubleprime and m are positive
    integers or math.inf.  certified is the exact comparison
    m >= delta^2 + delta + 1.
    """

    normals: frozenset
    m_prime: int | float
    m_doubleprime: int | float
    m: int | float
    delta: Fraction
    det_set: frozenset
    certified: bool


def edge_normals(K) -> frozenset:
    """Primitive outward normals of the hull edges of K."""
    pts = point_set(K)
    if not spans_plane(pts):
        raise LatticeError("degenerate set")
    if not is_lattice_convex(pts):
        raise LatticeError("set is not lattice-convex")
    hull = convex_hull(pts)
    # CCW edge direction (dx, dy) has outward normal (dy, -dx); directions
    # from Hull2 are already primitive.
    return frozenset((d[1], -d[0]) for _, d, _ in hull.edges)


def discrepancy(normals) -> tuple[frozenset, Fraction]:
    """(det_set, delta): nonzero |det| values over pairs of normals and
    their max/min ratio."""
    ns = sorted(point_set(normals))
    dets = {abs(det2(u, v)) for u, v in combinations(ns, 2)}
    dets.discard(0)
    if not dets:
        raise LatticeError("degenerate set")
    return frozenset(dets), Fraction(max(dets), min(dets))


def _certified(m, delta: Fraction) -> bool:
    if m == inf:
        return True
    return Fraction(m) >= delta * delta + delta + 1


def invariants_direct(K) -> InvariantRecord:
    """Invariants computed from the set itself."""
    pts = point_set(K)
    outward = edge_normals(pts)
    normals = outward | frozenset(vneg(u) for u in outward)
    card = {u: len(support_set(pts, u)) for u in normals}
    m_prime = min(card[u] for u in outward)
    m_double = inf
    for u in normals:
        a, b = card[u], card[vneg(u)]
        if a > b > 1:
            m_double = min(m_double, a - b + 1)
    det_set, delta = discrepancy(normals)
    m = min(m_prime, m_double)
    return InvariantRecord(
        normals=normals,
        m_prime=m_prime,
        m_doubleprime=m_double,
        m=m,
        delta=delta,
        det_set=det_set,
        certified=_certified(m, delta),
    )


def delta_bound_check(normals, n: int) -> bool:
    """Exact check of delta <= 2 n^2 for normal sets drawn from the
    (2n+1) x (2n+1) coordinate window."""
    if n < 1:
        raise LatticeError("window radius must be positive")
    _, delta = discrepancy(normals)
    return delta <= 2 * n * n
