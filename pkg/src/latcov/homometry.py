"""Construction and verification of homometric pairs.

The engine is the width-one strip T(k, l): a row of k+1 points with a row
of l+1 points above it (k > l >= 0).  Its translates along the index
sublattice generated by w1 = (-k-1, 1) and w2 = (l+1, 1) tile the plane,
and |det(w1, w2)| = k + l + 2 = |T|.

For any S, the mirror pair (S + T, S + (-T)) of a direct sum has equal
covariograms; it is a nontrivial pair exactly when neither summand is
centrally symmetric.  The direct sum is lattice-convex precisely when S
is lattice-convex with respect to the sublattice and the hull edges of S
point along w1, w2 (and w1 + w2 when k = l + 1); for k = l + 1 the
admissible S form a hexagon family in sublattice coordinates.

Every claimed property of a constructed pair is verified by computation
before it is reported, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .covariogram import compute_covariogram, covariogram_equal
from .lattice import (
    LatticeError,
    canonical_form,
    convex_hull,
    det2,
    is_centrally_symmetric,
    is_lattice_convex,
    point_set,
    primitive,
    vadd,
    vneg,
    vsub,
)


@dataclass(frozen=True)
class WidthOneParams:
    """Shape parameters of the strip: row lengths k+1 over l+1, k > l >= 0."""

    k: int
    ell: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.ell, int)):
            raise LatticeError("parameters must be integers")
        if not self.k > self.ell >= 0:
            raise LatticeError("parameters require k > l >= 0")

    @property
    def w1(self) -> tuple[int, int]:
        return (-self.k - 1, 1)

    @property
    def w2(self) -> tuple[int, int]:
        return (self.ell + 1, 1)

    @property
    def index(self) -> int:
        return self.k + self.ell + 2

    def basis(self) -> "SublatticeBasis":
        return SublatticeBasis(self.w1, self.w2, self.index)


@dataclass(frozen=True)
class SublatticeBasis:
    """Basis (w1, w2) of the tiling sublattice; |det| equals the strip size."""

    w1: tuple[int, int]
    w2: tuple[int, int]
    index: int

    def __post_init__(self):
        if abs(det2(self.w1, self.w2)) != self.index:
            raise LatticeError("basis determinant does not match the strip size")

    def contains(self, p) -> bool:
        x, y = p
        k1 = -self.w1[0]  # k + 1
        return (x + k1 * y) % self.index == 0

    def coords(self, p) -> tuple[int, int]:
        """Integer coordinates of a sublattice member in the (w1, w2) basis."""
        x, y = p
        d = det2(self.w1, self.w2)  # -(k + l + 2)
        i_num = x * self.w2[1] - y * self.w2[0]
        j_num = -x * self.w1[1] + y * self.w1[0]
        if i_num % d or j_num % d:
            raise LatticeError("point is not in the sublattice")
        return (i_num // d, j_num // d)

    def from_coords(self, ij) -> tuple[int, int]:
        i, j = ij
        return (i * self.w1[0] + j * self.w2[0], i * self.w1[1] + j * self.w2[1])


@dataclass(frozen=True)
class HexagonParams:
    """Sublattice-coordinate window a1 <= i <= a2, b1 <= j <= b2,
    g1 <= i - j <= g2; the window must be a nonempty region."""

    a1: int
    a2: int
    b1: int
    b2: int
    g1: int
    g2: int

    def __post_init__(self):
        if self.a1 > self.a2 or self.b1 > self.b2 or self.g1 > self.g2:
            raise LatticeError("empty parameter range")
        if not self.region():
            raise LatticeError("hexagon region is empty")

    def region(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.a1, self.a2 + 1)
            for j in range(self.b1, self.b2 + 1)
            if self.g1 <= i - j <= self.g2
        ]


@dataclass(frozen=True)
class MirrorPairReport:
    """A verified homometric pair and the witnesses it was built from.

    second is always built from base and the negation of mirrored, so the
    pair is (combine(base, mirrored), combine(base, -mirrored)).
    homometric and nontrivial are computed, and nontrivial is cross-checked
    against inequality of canonical forms.
    """

    first: frozenset
    second: frozenset
    base: frozenset
    mirrored: frozenset
    homometric: bool
    nontrivial: bool


def width_one_T(params: WidthOneParams) -> frozenset:
    """The strip: {0..k} x {0} together with {0..l} x {1}."""
    k, ell = params.k, params.ell
    row0 = {(i, 0) for i in range(k + 1)}
    row1 = {(i, 1) for i in range(ell + 1)}
    return frozenset(row0 | row1)


def sum_is_direct(S, T) -> bool:
    """True iff |S + T| = |S| |T|, i.e. all sums are distinct."""
    Sp = point_set(S)
    Tp = point_set(T)
    if len(next(iter(Sp))) != len(next(iter(Tp))):
        raise LatticeError("dimension mismatch")
    sums = {vadd(s, t) for s in Sp for t in Tp}
    return len(sums) == len(Sp) * len(Tp)


def direct_sum(S, T) -> frozenset:
    Sp = point_set(S)
    Tp = point_set(T)
    if not sum_is_direct(Sp, Tp):
        raise LatticeError("sum not direct")
    return frozenset(vadd(s, t) for s in Sp for t in Tp)


def mirror_pair(S, T) -> MirrorPairReport:
    """Build and verify the pair (S + T, S + (-T)) of a direct sum."""
    Sp = point_set(S)
    Tp = point_set(T)
    first = direct_sum(Sp, Tp)
    negT = frozenset(vneg(t) for t in Tp)
    if not sum_is_direct(Sp, negT):
        raise LatticeError("sum not direct")
    second = frozenset(vadd(s, t) for s in Sp for t in negT)
    homometric = covariogram_equal(compute_covariogram(first),
                                   compute_covariogram(second))
    if not homometric:
        raise AssertionError("mirror pair failed the covariogram identity")
    nontrivial = not is_centrally_symmetric(Sp) and not is_centrally_symmetric(Tp)
    distinct = canonical_form(first) != canonical_form(second)
    if nontrivial != distinct:
        raise AssertionError("nontriviality flag disagrees with canonical forms")
    return MirrorPairReport(first, second, Sp, Tp, homometric, nontrivial)


def decompose_plane(p, params: WidthOneParams) -> tuple[tuple[int, int], tuple[int, int]]:
    """Unique writing of a lattice point as sublattice member plus strip point."""
    p = tuple(p)
    basis = params.basis()
    hits = [(vsub(p, t), t) for t in sorted(width_one_T(params))
            if basis.contains(vsub(p, t))]
    assert len(hits) == 1, "plane decomposition must be unique"
    return hits[0]


_AXIS_DIRS = frozenset({(1, 0), (0, 1)})
_HEX_DIRS = frozenset({(1, 0), (0, 1), (1, 1)})


def _coord_window(S, params: WidthOneParams):
    """Anchor S at one of its points and map into sublattice coordinates;
    None when the anchored set leaves the sublattice."""
    Sp = point_set(S)
    if len(next(iter(Sp))) != 2:
        raise LatticeError("expected a planar set")
    anchor = min(Sp)
    basis = params.basis()
    coords = []
    for p in Sp:
        q = vsub(p, anchor)
        if not basis.contains(q):
            return None
        coords.append(basis.coords(q))
    return frozenset(coords)


def condition_i(S, params: WidthOneParams) -> bool:
    """S sums directly with the strip and the sum is lattice-convex."""
    T = width_one_T(params)
    Sp = point_set(S)
    if not sum_is_direct(Sp, T):
        return False
    return is_lattice_convex(frozenset(vadd(s, t) for s in Sp for t in T))


def condition_ii(S, params: WidthOneParams) -> bool:
    """S is, up to translation, a sublattice-convex set whose hull edges
    point along the admissible strip directions."""
    coords = _coord_window(S, params)
    if coords is None:
        return False
    if not is_lattice_convex(coords):
        return False
    allowed = _HEX_DIRS if params.k == params.ell + 1 else _AXIS_DIRS
    hull = convex_hull(coords)
    if len(hull.vertices) == 1:
        return True
    for _, d, _ in hull.edges:
        d = primitive(d)
        if d not in allowed and vneg(d) not in allowed:
            return False
    return True


def gs_graph_connected(S, params: WidthOneParams) -> bool:
    """Connectivity of S under steps by +-w1, +-w2 (and +-(w1+w2) when
    k = l + 1).  S must lie inside the sublattice itself."""
    Sp = point_set(S)
    basis = params.basis()
    for p in Sp:
        if not basis.contains(p):
            raise LatticeError("set is not contained in the sublattice")
    steps = [params.w1, vneg(params.w1), params.w2, vneg(params.w2)]
    if params.k == params.ell + 1:
        w12 = vadd(params.w1, params.w2)
        steps += [w12, vneg(w12)]
    start = min(Sp)
    seen = {start}
    frontier = [start]
    while frontier:
        p = frontier.pop()
        for s in steps:
            q = vadd(p, s)
            if q in Sp and q not in seen:
                seen.add(q)
                frontier.append(q)
    return len(seen) == len(Sp)


def product_pair(K, L) -> MirrorPairReport:
    """The pair (K x L, K x (-L)) in the product dimension, verified."""
    Kp = point_set(K)
    Lp = point_set(L)
    first = frozenset(a + b for a in Kp for b in Lp)
    second = frozenset(a + vneg(b) for a in Kp for b in Lp)
    homometric = covariogram_equal(compute_covariogram(first),
                                   compute_covariogram(second))
    if not homometric:
        raise AssertionError("product pair failed the covariogram identity")
    nontrivial = not is_centrally_symmetric(Kp) and not is_centrally_symmetric(Lp)
    distinct = canonical_form(first) != canonical_form(second)
    if nontrivial != distinct:
        raise AssertionError("nontriviality flag disagrees with canonical forms")
    return MirrorPairReport(first, second, Kp, Lp, homometric, nontrivial)


def corollary_pair_generator(params: WidthOneParams, hexagon: HexagonParams) -> MirrorPairReport:
    """Mirror pair for a hexagon-family S; requires k = l + 1.

    The constructed pair is verified lattice-convex on both sides and the
    shape condition on S is checked rather than trusted.
    """
    if params.k != params.ell + 1:
        raise LatticeError("corollary_pair_generator requires k = l + 1")
    basis = params.basis()
    S = frozenset(basis.from_coords(ij) for ij in hexagon.region())
    if not condition_ii(S, params):
        raise AssertionError("hexagon region failed the shape condition")
    report = mirror_pair(S, width_one_T(params))
    if not is_lattice_convex(report.first) or not is_lattice_convex(report.second):
        raise AssertionError("generated pair is not lattice-convex")
    return report
