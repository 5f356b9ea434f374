"""Discrete covariograms of finite lattice sets.

The covariogram of K maps each vector u to |K meet (K+u)|, the overlap
count of K with its own translate.  It is symmetric under negation, is
supported exactly on the difference set of K, and peaks at the origin
with value |K|.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .lattice import LatticeError, point_set, vadd, vneg


@dataclass(frozen=True, eq=True)
class Covariogram:
    """Table of overlap counts, keyed by lattice vector.

    Entries store u and -u redundantly.  Symmetry, positivity of counts,
    and presence and maximality of the origin entry are all checked at
    construction time; an object of this type is always a structurally
    valid covariogram (though not necessarily realizable by any set).
    """

    dim: int
    entries: dict

    def __post_init__(self):
        origin = (0,) * self.dim
        e = self.entries
        peak = e.get(origin)
        if peak is None:
            raise LatticeError("invalid covariogram: origin entry missing")
        for u, c in e.items():
            if len(u) != self.dim:
                raise LatticeError("invalid covariogram: mixed dimensions")
            if not isinstance(c, int) or c <= 0:
                raise LatticeError("invalid covariogram: counts must be positive integers")
            if c > peak:
                raise LatticeError("invalid covariogram: origin entry is not maximal")
            if e.get(vneg(u)) != c:
                raise LatticeError("invalid covariogram: not symmetric under negation")

    @property
    def mass(self) -> int:
        return sum(self.entries.values())

    def value(self, u) -> int:
        return self.entries.get(tuple(u), 0)


def compute_covariogram(K) -> Covariogram:
    """Covariogram of a finite set, by counting ordered difference pairs."""
    pts = list(point_set(K))
    d = len(pts[0])
    if d == 2:
        counts = Counter((a[0] - b[0], a[1] - b[1]) for a in pts for b in pts)
    else:
        counts = Counter(tuple(x - y for x, y in zip(a, b)) for a in pts for b in pts)
    return Covariogram(d, dict(counts))


def covariogram_equal(g1: Covariogram, g2: Covariogram) -> bool:
    if g1.dim != g2.dim:
        raise LatticeError("dimension mismatch")
    return g1.entries == g2.entries


def support_of(g: Covariogram) -> frozenset:
    """Vectors with positive count; equals the difference set of any
    realizing set."""
    return frozenset(g.entries)


def convolve(g1: Covariogram, g2: Covariogram) -> Covariogram:
    """Convolution of two covariograms.

    When S and T sum directly, the covariogram of the direct sum is the
    convolution of the summands' covariograms.
    """
    if g1.dim != g2.dim:
        raise LatticeError("dimension mismatch")
    out: Counter = Counter()
    for v, cv in g1.entries.items():
        for w, cw in g2.entries.items():
            out[vadd(v, w)] += cv * cw
    return Covariogram(g1.dim, dict(out))
