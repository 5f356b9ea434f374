"""Exhaustive search for homometric pairs among planar lattice-convex sets.

Enumeration walks translation classes of spanning lattice-convex sets
fitting a box, groups them by covariogram, and reports every class with
two or more members up to translation and point reflection.  Each found
pair can be matched, up to unimodular affine maps of the lattice, against
the hexagon-family mirror pairs of width-one strips.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ._polygons import convex_classes
from .covariogram import compute_covariogram, covariogram_equal
from .homometry import (
    HexagonParams,
    WidthOneParams,
    mirror_pair,
    width_one_T,
)
from .lattice import (
    AffineMap2,
    LatticeError,
    affine_witnesses,
    canonical_form,
    difference_set,
    is_centrally_symmetric,
    min_corner,
    point_set,
    vadd,
    vsub,
)

DESK_SCALE_LIMIT = 42


@dataclass(frozen=True)
class CorollaryMatch:
    """Witness that a found pair is a hexagon-family mirror pair up to a
    unimodular affine map (the same matrix for both members; swapped
    records whether the members matched in reversed order)."""

    params: WidthOneParams
    hexagon: HexagonParams
    first_map: AffineMap2
    second_map: AffineMap2
    swapped: bool


@dataclass(frozen=True)
class PairVerdict:
    first: frozenset
    second: frozenset
    match: CorollaryMatch | None


@dataclass(frozen=True)
class HomometricClass:
    """Sets sharing one covariogram: two or more distinct canonical forms."""

    members: tuple
    pairs: tuple


@dataclass(frozen=True)
class SearchReport:
    width: int
    height: int
    total_classes: int
    classes: tuple


def enumerate_lattice_convex(width: int, height: int, jobs: int = 1):
    """Every spanning lattice-convex set whose tight bounding box fits a
    width x height point grid, once per translation class, box corner at
    the origin.  Deterministic order."""
    if width < 1 or height < 1:
        raise LatticeError("box dimensions must be positive")
    yield from convex_classes(width - 1, height - 1, jobs=jobs)


def homometric_classes(width: int, height: int, jobs: int = 1,
                       match: bool = False,
                       allow_large: bool = False) -> SearchReport:
    """Group the enumeration of a box by covariogram and report collisions.

    Grouping by covariogram automatically merges translates and point
    reflections, so a class is interesting exactly when it holds two or
    more distinct canonical forms.  Every reported pair is re-verified.
    """
    if width * height > DESK_SCALE_LIMIT and not allow_large:
        raise LatticeError(
            "box exceeds the desk-scale limit; pass allow_large=True to override")
    by_fingerprint: dict = {}
    total = 0
    for K in enumerate_lattice_convex(width, height, jobs=jobs):
        total += 1
        g = compute_covariogram(K)
        fp = tuple(sorted(g.entries.items()))
        by_fingerprint.setdefault(fp, set()).add(canonical_form(K))
    found = []
    for fp, forms in by_fingerprint.items():
        if len(forms) < 2:
            continue
        members = tuple(sorted(forms, key=sorted))
        pairs = []
        for a, b in combinations(members, 2):
            if not covariogram_equal(compute_covariogram(a), compute_covariogram(b)):
                raise AssertionError("covariogram grouping failed re-verification")
            if canonical_form(a) == canonical_form(b):
                raise AssertionError("distinct members share a canonical form")
            verdict = match_corollary(a, b) if match else None
            pairs.append(PairVerdict(a, b, verdict))
        found.append(HomometricClass(members, tuple(pairs)))
    found.sort(key=lambda c: sorted(c.members[0]))
    return SearchReport(width, height, total, tuple(found))


def _hexagon_candidates(size: int):
    """Hexagon windows holding exactly size points, one per translation
    class of the coordinate region, in deterministic order."""
    seen = set()
    out = []
    for a2 in range(size):
        for b2 in range(size):
            for g1 in range(-b2, a2 + 1):
                for g2 in range(g1, a2 + 1):
                    try:
                        hx = HexagonParams(0, a2, 0, b2, g1, g2)
                    except LatticeError:
                        continue
                    region = hx.region()
                    if len(region) != size:
                        continue
                    mi = min(i for i, _ in region)
                    mj = min(j for _, j in region)
                    key = frozenset((i - mi, j - mj) for i, j in region)
                    if key in seen:
                        continue
                    seen.add(key)
                    out.append(hx)
    return out


def _translation_to(matrix, src, dst) -> tuple | None:
    """Shift t with {matrix p + t} = dst, or None."""
    img = frozenset((matrix[0][0] * p[0] + matrix[0][1] * p[1],
                     matrix[1][0] * p[0] + matrix[1][1] * p[1]) for p in src)
    t = vsub(min_corner(dst), min_corner(img))
    if frozenset(vadd(p, t) for p in img) == dst:
        return t
    return None


def match_corollary(K, L, k_max: int = 4) -> CorollaryMatch | None:
    """Match a nontrivially homometric pair against the hexagon family.

    Tries every strip size k = l + 1 up to k_max whose size divides |K|
    and every hexagon window of the right cardinality; a match needs one
    unimodular matrix carrying K and L onto the generated pair (in either
    order), with translations free per member and the second member also
    allowed a point reflection, since members are only determined up to
    their class."""
    Kp = point_set(K)
    Lp = point_set(L)
    if not covariogram_equal(compute_covariogram(Kp), compute_covariogram(Lp)):
        raise LatticeError("pair is not homometric")
    if canonical_form(Kp) == canonical_form(Lp):
        raise LatticeError("pair is trivial")
    n = len(Kp)
    for k in range(1, k_max + 1):
        params = WidthOneParams(k, k - 1)
        if n % params.index:
            continue
        size = n // params.index
        T = width_one_T(params)
        basis = params.basis()
        for hx in _hexagon_candidates(size):
            S = frozenset(basis.from_coords(ij) for ij in hx.region())
            if is_centrally_symmetric(S):
                continue
            pair = mirror_pair(S, T)
            for swapped, (P, Q) in enumerate(
                    [(pair.first, pair.second), (pair.second, pair.first)]):
                for wit in affine_witnesses(Kp, P):
                    m = wit.matrix
                    for mm in (m, ((-m[0][0], -m[0][1]), (-m[1][0], -m[1][1]))):
                        t = _translation_to(mm, Lp, Q)
                        if t is not None:
                            return CorollaryMatch(
                                params, hx, wit,
                                AffineMap2(mm, t), bool(swapped))
    return None


def _tilings(K0: frozenset, tile: tuple, positions: list):
    """Exact-cover enumeration: position sets whose tile translates
    partition K0."""
    pos_cover = {}
    for s in positions:
        pos_cover[s] = frozenset(vadd(s, t) for t in tile)

    def rec(uncovered, chosen):
        if not uncovered:
            yield frozenset(chosen)
            return
        p = min(uncovered)
        for t in tile:
            s = vsub(p, t)
            cover = pos_cover.get(s)
            if cover is not None and cover <= uncovered:
                chosen.append(s)
                yield from rec(uncovered - cover, chosen)
                chosen.pop()

    yield from rec(frozenset(K0), [])


def constructibility_search(K, L, t_max: int = 12,
                            require_nontrivial: bool = False):
    """Look for S and a tile T with K = S + T directly and S + (-T) in
    the class of L.  Bounded by t_max, so a None is not a proof of
    impossibility.

    Candidate tiles anchor their lexicographic minimum at the one of K,
    must have size dividing |K|, and must fit the difference set of K;
    each is tried by exact-cover tiling."""
    Kp = point_set(K)
    Lp = point_set(L)
    if len(next(iter(Kp))) != 2 or len(next(iter(Lp))) != 2:
        raise LatticeError("dimension")
    if not covariogram_equal(compute_covariogram(Kp), compute_covariogram(Lp)):
        raise LatticeError("pair is not homometric")
    n = len(Kp)
    anchor = min(Kp)
    K0 = frozenset(vsub(p, anchor) for p in Kp)
    DK0 = difference_set(K0)
    canon_L = canonical_form(Lp)
    rest = sorted(K0 - {(0, 0)})
    for size in range(2, min(t_max, n) + 1):
        if n % size:
            continue
        for combo in combinations(rest, size - 1):
            tile = ((0, 0),) + combo
            if not difference_set(tile) <= DK0:
                continue
            tileset = frozenset(tile)
            positions = [s for s in sorted(K0)
                         if all(vadd(s, t) in K0 for t in tile)]
            if len(positions) * size < n:
                continue
            for S in _tilings(K0, tile, positions):
                mirror = frozenset(vsub(s, t) for s in S for t in tile)
                if len(mirror) != n:
                    continue
                if canonical_form(mirror) != canon_L:
                    continue
                if require_nontrivial and (is_centrally_symmetric(S)
                                           or is_centrally_symmetric(tileset)):
                    continue
                return (frozenset(vadd(s, anchor) for s in S), tileset)
    return None
