"""Shared test oracles, deliberately independent of the library internals.

Everything here recomputes geometry the slow way (scans, triangle
decompositions, subset filters) so library results can be checked
against a second opinion.
"""

import itertools
import random


def brute_covariogram(K):
    """Overlap counts by literal set intersection, one shift at a time."""
    K = set(K)
    out = {}
    for a in K:
        for b in K:
            u = tuple(x - y for x, y in zip(a, b))
            shifted = {tuple(x + d for x, d in zip(p, u)) for p in K}
            out[u] = len(K & shifted)
    return out


def sign(x):
    return (x > 0) - (x < 0)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def in_triangle(p, a, b, c):
    """Exact point-in-nondegenerate-triangle test, boundary inclusive."""
    d1 = _cross(a, b, p)
    d2 = _cross(b, c, p)
    d3 = _cross(c, a, p)
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def on_segment(p, a, b):
    return (_cross(a, b, p) == 0
            and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def in_hull(p, pts):
    """p inside conv(pts): some proper triangle holds it, or some segment
    does (planar Caratheodory)."""
    pts = list(pts)
    if p in pts:
        return True
    for a, b in itertools.combinations(pts, 2):
        if on_segment(p, a, b):
            return True
    for a, b, c in itertools.combinations(pts, 3):
        if _cross(a, b, c) != 0 and in_triangle(p, a, b, c):
            return True
    return False


def brute_hull_points(pts):
    """All lattice points of conv(pts), by scanning the bounding box."""
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    out = set()
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if in_hull((x, y), pts):
                out.add((x, y))
    return out


def brute_lattice_convex(K):
    return set(K) == brute_hull_points(K)


def brute_spanning(K):
    pts = list(K)
    o = pts[0]
    return any(_cross(o, a, b) != 0 for a, b in itertools.combinations(pts[1:], 2))


def spanning_convex_subsets(width, height):
    """Every spanning lattice-convex subset of the box, the 2^(w*h) way."""
    cells = [(x, y) for x in range(width) for y in range(height)]
    found = []
    for mask in range(1, 2 ** len(cells)):
        sub = [c for i, c in enumerate(cells) if mask >> i & 1]
        if len(sub) < 3:
            continue
        if not brute_spanning(sub):
            continue
        if brute_lattice_convex(sub):
            found.append(frozenset(sub))
    return found


def min_normalize(pts):
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return frozenset((p[0] - min(xs), p[1] - min(ys)) for p in pts)


def translation_classes(sets):
    return {min_normalize(s) for s in sets}


def random_lattice_convex(rng: random.Random, width, height, min_pts=3):
    """Random spanning lattice-convex set inside a width x height box."""
    while True:
        k = rng.randint(min_pts, 8)
        seed = {(rng.randrange(width), rng.randrange(height)) for _ in range(k)}
        if len(seed) < 3 or not brute_spanning(seed):
            continue
        return frozenset(brute_hull_points(seed))


def support_points(K, u):
    """argmax of the scalar product, the direct way."""
    best = max(p[0] * u[0] + p[1] * u[1] for p in K)
    return frozenset(p for p in K if p[0] * u[0] + p[1] * u[1] == best)


def primitive_directions(bound):
    """All primitive integer vectors with coordinates in [-bound, bound]."""
    from math import gcd
    out = []
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if (x, y) != (0, 0) and gcd(abs(x), abs(y)) == 1:
                out.append((x, y))
    return out


def brute_edge_invariants(K):
    """(edge normal set, m_prime, m_doubleprime) by scanning all primitive
    directions large enough to see every hull edge."""
    import math
    xs = [p[0] for p in K]
    ys = [p[1] for p in K]
    bound = max(max(xs) - min(xs), max(ys) - min(ys)) + 1
    normals = set()
    m_prime = None
    m_double = None
    for u in primitive_directions(bound):
        a = len(support_points(K, u))
        if a < 2:
            continue
        normals.add(u)
        if m_prime is None or a < m_prime:
            m_prime = a
        b = len(support_points(K, (-u[0], -u[1])))
        if a > b > 1 and (m_double is None or a - b + 1 < m_double):
            m_double = a - b + 1
    return normals, m_prime, (math.inf if m_double is None else m_double)
