"""Exact geometry on the integer lattice.

Points are plain tuples of Python ints and point sets are frozensets of
such tuples.  Everything here is integer arithmetic; there is no floating
point anywhere in the package, so results are exact at any coordinate size.

Most operations live in the plane (d = 2).  The few that make sense in any
dimension (difference sets, central symmetry, canonical forms) accept
tuples of arbitrary equal length.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

Point = tuple[int, ...]


class LatticeError(ValueError):
    """Domain error: empty input, wrong dimension, degenerate set, ..."""


def vadd(a: Point, b: Point) -> Point:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Point, b: Point) -> Point:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a: Point) -> Point:
    return tuple(-x for x in a)


def dot(a: Point, b: Point) -> int:
    return sum(x * y for x, y in zip(a, b, strict=True))


def det2(u: Point, v: Point) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def primitive(u: Point) -> Point:
    """Scale a nonzero integer vector down to primitive (gcd 1), keeping sign."""
    g = gcd(*(abs(c) for c in u))
    if g == 0:
        raise LatticeError("zero direction")
    return tuple(c // g for c in u)


def point_set(points) -> frozenset[Point]:
    """Freeze an iterable of points, checking nonemptiness and uniform dimension."""
    pts = frozenset(tuple(p) for p in points)
    if not pts:
        raise LatticeError("empty set")
    dims = {len(p) for p in pts}
    if len(dims) != 1:
        raise LatticeError("mixed dimensions")
    return pts


def dim_of(points) -> int:
    for p in points:
        return len(p)
    raise LatticeError("empty set")


def translate(points, t: Point) -> frozenset[Point]:
    return frozenset(vadd(p, t) for p in points)


def min_corner(points) -> Point:
    """Componentwise minimum over a nonempty point set."""
    return tuple(min(c) for c in zip(*points))


def extent(points) -> Point:
    """Componentwise width of the tight bounding box."""
    cols = list(zip(*points))
    return tuple(max(c) - min(c) for c in cols)


def _min_normalized(pts: frozenset[Point]) -> frozenset[Point]:
    lo = min_corner(pts)
    return frozenset(vsub(p, lo) for p in pts)


@dataclass(frozen=True)
class Hull2:
    """Convex hull of a planar point set.

    Vertices are in counterclockwise order and are exactly the extreme
    points (no three consecutive collinear).  A hull of one or two vertices
    is degenerate: the input was a single point or collinear.
    """

    vertices: tuple[Point, ...]

    @property
    def is_degenerate(self) -> bool:
        return len(self.vertices) < 3

    @property
    def edges(self) -> list[tuple[Point, Point, int]]:
        """Directed boundary edges as (start vertex, primitive direction,
        lattice point count on the closed edge)."""
        vs = self.vertices
        if len(vs) < 2:
            return []
        out = []
        for i, a in enumerate(vs):
            b = vs[(i + 1) % len(vs)]
            dx, dy = b[0] - a[0], b[1] - a[1]
            g = gcd(abs(dx), abs(dy))
            out.append((a, (dx // g, dy // g), g + 1))
        return out


def convex_hull(K) -> Hull2:
    """Monotone chain hull, counterclockwise, strict (collinear points dropped)."""
    pts = sorted(set(tuple(p) for p in K))
    if not pts:
        raise LatticeError("empty set")
    if len(pts[0]) != 2:
        raise LatticeError("convex hull requires dimension 2")
    if len(pts) == 1:
        return Hull2((pts[0],))
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return Hull2(tuple(lower[:-1] + upper[:-1]))


def segment_lattice_points(a: Point, b: Point) -> list[Point]:
    """All lattice points on the closed segment from a to b, in order."""
    if a == b:
        return [tuple(a)]
    d = vsub(b, a)
    g = gcd(*(abs(c) for c in d))
    step = tuple(c // g for c in d)
    return [tuple(x + i * s for x, s in zip(a, step)) for i in range(g + 1)]


def hull_lattice_points(hull: Hull2) -> frozenset[Point]:
    """Every lattice point inside or on the hull."""
    vs = hull.vertices
    if len(vs) == 1:
        return frozenset(vs)
    if len(vs) == 2:
        return frozenset(segment_lattice_points(vs[0], vs[1]))
    # Half-plane form of each edge: A*x + B*y + C >= 0 inside.
    halves = []
    for i, (ax, ay) in enumerate(vs):
        bx, by = vs[(i + 1) % len(vs)]
        halves.append((-(by - ay), bx - ax, (by - ay) * ax - (bx - ax) * ay))
    xs = [v[0] for v in vs]
    ys = [v[1] for v in vs]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if all(A * x + B * y + C >= 0 for A, B, C in halves):
                out.append((x, y))
    return frozenset(out)


def is_lattice_convex(K) -> bool:
    """True iff K equals the set of lattice points of its own convex hull."""
    pts = point_set(K)
    if dim_of(pts) != 2:
        raise LatticeError("lattice convexity test requires dimension 2")
    return hull_lattice_points(convex_hull(pts)) == pts


def spans_plane(K) -> bool:
    """True iff the planar set contains three non-collinear points."""
    pts = list(point_set(K))
    if len(pts) < 3:
        return False
    p0 = pts[0]
    base = None
    for p in pts[1:]:
        if base is None:
            base = vsub(p, p0)
        elif det2(base, vsub(p, p0)) != 0:
            return True
    return False


def support_set(K, u) -> frozenset[Point]:
    """Points of K with maximal inner product against u."""
    pts = point_set(K)
    u = tuple(u)
    if all(c == 0 for c in u):
        raise LatticeError("zero direction")
    best = max(dot(p, u) for p in pts)
    return frozenset(p for p in pts if dot(p, u) == best)


def difference_set(K) -> frozenset[Point]:
    """K + (-K): all pairwise differences."""
    pts = list(point_set(K))
    if len(pts[0]) == 2:
        return frozenset((a[0] - b[0], a[1] - b[1]) for a in pts for b in pts)
    return frozenset(vsub(a, b) for a in pts for b in pts)


def is_centrally_symmetric(K) -> bool:
    """True iff -K is a translate of K."""
    pts = point_set(K)
    return _min_normalized(pts) == _min_normalized(frozenset(vneg(p) for p in pts))


def canonical_form(K) -> frozenset[Point]:
    """Distinguished representative of K's class under translations and
    point reflections.

    K and -K are each translated so their componentwise minimum is the
    origin; the representative is whichever has the lexicographically
    smaller sorted point list.
    """
    pts = point_set(K)
    a = sorted(_min_normalized(pts))
    b = sorted(_min_normalized(frozenset(vneg(p) for p in pts)))
    return frozenset(a if a <= b else b)


@dataclass(frozen=True)
class AffineMap2:
    """Unimodular affine map of the plane lattice: x -> M x + t with
    integer M, det M = +-1."""

    matrix: tuple[tuple[int, int], tuple[int, int]]
    shift: tuple[int, int]

    def __post_init__(self):
        if abs(self.det) != 1:
            raise LatticeError("matrix is not unimodular")

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def apply(self, p: Point) -> Point:
        (a, b), (c, d) = self.matrix
        return (a * p[0] + b * p[1] + self.shift[0],
                c * p[0] + d * p[1] + self.shift[1])

    def apply_set(self, K) -> frozenset[Point]:
        return frozenset(self.apply(p) for p in K)

    def inverse(self) -> "AffineMap2":
        (a, b), (c, d) = self.matrix
        s = self.det  # +1 or -1
        inv = ((s * d, -s * b), (-s * c, s * a))
        tx = -(inv[0][0] * self.shift[0] + inv[0][1] * self.shift[1])
        ty = -(inv[1][0] * self.shift[0] + inv[1][1] * self.shift[1])
        return AffineMap2(inv, (tx, ty))

    @classmethod
    def identity(cls) -> "AffineMap2":
        return cls(((1, 0), (0, 1)), (0, 0))


def _anchor_triple(pts: list[Point]):
    """Affinely independent triple with minimal |det| of its edge pair."""
    best = None
    for p0, p1, p2 in combinations(pts, 3):
        d = abs(det2(vsub(p1, p0), vsub(p2, p0)))
        if d and (best is None or d < best[0]):
            best = (d, p0, p1, p2)
            if d == 1:
                break
    return best


def affine_witnesses(K, L):
    """Yield every unimodular affine map sending K exactly onto L.

    Anchored at a minimal-determinant independent triple of K; candidate
    images are the ordered triples of L with the same absolute determinant.
    """
    Kp = sorted(point_set(K))
    Lp = sorted(point_set(L))
    if len(Kp[0]) != 2 or len(Lp[0]) != 2:
        raise LatticeError("affine equivalence requires dimension 2")
    if not spans_plane(Kp) or not spans_plane(Lp):
        raise LatticeError("degenerate set")
    if len(Kp) != len(Lp):
        return
    d, p0, p1, p2 = _anchor_triple(Kp)
    e1 = vsub(p1, p0)
    e2 = vsub(p2, p0)
    detm = det2(e1, e2)
    Lset = set(Lp)
    for q0 in Lp:
        for q1 in Lp:
            if q1 == q0:
                continue
            f1 = vsub(q1, q0)
            for q2 in Lp:
                if q2 == q0 or q2 == q1:
                    continue
                f2 = vsub(q2, q0)
                if abs(det2(f1, f2)) != d:
                    continue
                # Solve A [e1 e2] = [f1 f2] by adjugate; A must be integral.
                n00 = f1[0] * e2[1] - f2[0] * e1[1]
                n01 = -f1[0] * e2[0] + f2[0] * e1[0]
                n10 = f1[1] * e2[1] - f2[1] * e1[1]
                n11 = -f1[1] * e2[0] + f2[1] * e1[0]
                if any(n % detm for n in (n00, n01, n10, n11)):
                    continue
                mat = ((n00 // detm, n01 // detm), (n10 // detm, n11 // detm))
                t = (q0[0] - mat[0][0] * p0[0] - mat[0][1] * p0[1],
                     q0[1] - mat[1][0] * p0[0] - mat[1][1] * p0[1])
                fn = AffineMap2(mat, t)
                if all(fn.apply(p) in Lset for p in Kp):
                    yield fn


def affine_equivalent(K, L) -> AffineMap2 | None:
    """First unimodular affine map with map(K) = L, or None."""
    return next(affine_witnesses(K, L), None)


def _halfopen_interval(c: int):
    # Reachable multiples s*c for s in [0,1): half-open toward c.
    return (0, True, c, False) if c > 0 else (c, False, 0, True)


def halfopen_parallelogram_count(u, v) -> int:
    """Number of lattice points in [0,1)u + [0,1)v, by direct enumeration.

    For nonparallel u, v this equals |det(u, v)|.
    """
    u = tuple(u)
    v = tuple(v)
    if u == (0, 0) or v == (0, 0):
        raise LatticeError("zero direction")
    corners = [(0, 0), u, v, (u[0] + v[0], u[1] + v[1])]
    xs = [c[0] for c in corners]
    ys = [c[1] for c in corners]
    dd = det2(u, v)
    count = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            if dd != 0:
                s_num = det2(p, v)
                t_num = det2(u, p)
                if dd > 0:
                    ok = 0 <= s_num < dd and 0 <= t_num < dd
                else:
                    ok = dd < s_num <= 0 and dd < t_num <= 0
            else:
                p0 = primitive(u)
                if det2(p, p0) != 0:
                    ok = False
                else:
                    axis = 0 if p0[0] else 1
                    m, rem = divmod(p[axis], p0[axis])
                    a = u[axis] // p0[axis]
                    b = v[axis] // p0[axis]
                    if rem:
                        ok = False
                    else:
                        lo_a, cl_a, hi_a, ch_a = _halfopen_interval(a)
                        lo_b, cl_b, hi_b, ch_b = _halfopen_interval(b)
                        lo, lo_closed = lo_a + lo_b, cl_a and cl_b
                        hi, hi_closed = hi_a + hi_b, ch_a and ch_b
                        ok = ((m > lo or (lo_closed and m == lo))
                              and (m < hi or (hi_closed and m == hi)))
            if ok:
                count += 1
    return count
