"""Enumeration of strictly convex lattice polygons by edge-vector chains.

A strictly convex lattice polygon, up to translation, is exactly a set of
nonzero integer edge vectors, at most one per direction ray, summing to
zero, with at least three rays used; walking the vectors sorted by angle
traverses the boundary counterclockwise.  The enumeration below chooses
an increasing-angle subsequence of candidate vectors, pruning on the
bounding box of the partial vertex chain and on whether the remaining
vectors can still close the chain.

Sharding: the space partitions by the first (lowest-angle) ray used, so
each shard is independent and results merge deterministically.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import cmp_to_key
from math import gcd

_class_cache: dict = {}


def _angle_cmp(a, b):
    # Counterclockwise from the positive x axis: upper half-plane
    # (including +x ray) before lower (including -x ray).
    ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _ray_groups(max_dx: int, max_dy: int) -> list[list[tuple[int, int]]]:
    """Candidate edge vectors bucketed by direction ray, rays sorted by angle,
    vectors within a ray sorted by length."""
    rays: dict = {}
    for dx in range(-max_dx, max_dx + 1):
        for dy in range(-max_dy, max_dy + 1):
            if dx == 0 and dy == 0:
                continue
            g = gcd(abs(dx), abs(dy))
            rays.setdefault((dx // g, dy // g), []).append((dx, dy))
    order = sorted(rays, key=cmp_to_key(_angle_cmp))
    return [sorted(rays[r], key=lambda v: abs(v[0]) + abs(v[1])) for r in order]


def _suffix_reach(groups):
    """Per suffix of the ray list, the extreme total x and y displacement
    still achievable (one vector per ray at most)."""
    n = len(groups)
    neg_x = [0] * (n + 1)
    pos_x = [0] * (n + 1)
    neg_y = [0] * (n + 1)
    pos_y = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        xs = [v[0] for v in groups[i]]
        ys = [v[1] for v in groups[i]]
        neg_x[i] = neg_x[i + 1] + min(0, min(xs))
        pos_x[i] = pos_x[i + 1] + max(0, max(xs))
        neg_y[i] = neg_y[i + 1] + min(0, min(ys))
        pos_y[i] = pos_y[i + 1] + max(0, max(ys))
    return neg_x, pos_x, neg_y, pos_y


def _chains_from_root(groups, reach, lim_x, lim_y, root):
    """Closed convex chains whose lowest-angle ray is groups[root],
    as lists of edge vectors in angle order."""
    neg_x, pos_x, neg_y, pos_y = reach
    ngroups = len(groups)
    out = []
    chosen: list = []

    def rec(gi, x, y, mnx, mxx, mny, mxy):
        if x + neg_x[gi] > 0 or x + pos_x[gi] < 0:
            return
        if y + neg_y[gi] > 0 or y + pos_y[gi] < 0:
            return
        if gi == ngroups:
            if x == 0 and y == 0 and len(chosen) >= 3:
                out.append(chosen.copy())
            return
        rec(gi + 1, x, y, mnx, mxx, mny, mxy)
        for dx, dy in groups[gi]:
            nx, ny = x + dx, y + dy
            nmnx = nx if nx < mnx else mnx
            nmxx = nx if nx > mxx else mxx
            if nmxx - nmnx > lim_x:
                continue
            nmny = ny if ny < mny else mny
            nmxy = ny if ny > mxy else mxy
            if nmxy - nmny > lim_y:
                continue
            chosen.append((dx, dy))
            rec(gi + 1, nx, ny, nmnx, nmxx, nmny, nmxy)
            chosen.pop()

    for dx, dy in groups[root]:
        if abs(dx) > lim_x or abs(dy) > lim_y:
            continue
        chosen.append((dx, dy))
        rec(root + 1, dx, dy, min(0, dx), max(0, dx), min(0, dy), max(0, dy))
        chosen.pop()
    return out


def _lattice_points_of_chain(chain) -> frozenset:
    """Lattice points of the polygon traced by a closed convex chain,
    translated so the bounding box corner sits at the origin."""
    verts = [(0, 0)]
    x = y = 0
    for dx, dy in chain[:-1]:
        x += dx
        y += dy
        verts.append((x, y))
    mnx = min(v[0] for v in verts)
    mny = min(v[1] for v in verts)
    verts = [(vx - mnx, vy - mny) for vx, vy in verts]
    halves = []
    nv = len(verts)
    for i, (ax, ay) in enumerate(verts):
        bx, by = verts[(i + 1) % nv]
        halves.append((-(by - ay), bx - ax, (by - ay) * ax - (bx - ax) * ay))
    mxx = max(v[0] for v in verts)
    mxy = max(v[1] for v in verts)
    pts = []
    for px in range(mxx + 1):
        for py in range(mxy + 1):
            if all(a * px + b * py + c >= 0 for a, b, c in halves):
                pts.append((px, py))
    return frozenset(pts)


def _shard_sets(args) -> list:
    max_dx, max_dy, root = args
    groups = _ray_groups(max_dx, max_dy)
    reach = _suffix_reach(groups)
    chains = _chains_from_root(groups, reach, max_dx, max_dy, root)
    return [_lattice_points_of_chain(c) for c in chains]


def convex_classes(max_dx: int, max_dy: int, jobs: int = 1) -> tuple:
    """All spanning lattice-convex planar sets with tight bounding box
    extent at most (max_dx, max_dy), one per translation class, with the
    box corner at the origin.  Sorted deterministically; cached.
    """
    key = (max_dx, max_dy)
    cached = _class_cache.get(key)
    if cached is not None:
        return cached
    if max_dx < 1 or max_dy < 1:
        result: tuple = ()
        _class_cache[key] = result
        return result
    groups = _ray_groups(max_dx, max_dy)
    shard_args = [(max_dx, max_dy, r) for r in range(len(groups))]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            shards = list(pool.map(_shard_sets, shard_args))
    else:
        shards = [_shard_sets(a) for a in shard_args]
    sets = {s for shard in shards for s in shard}
    result = tuple(sorted(sets, key=sorted))
    _class_cache[key] = result
    return result
