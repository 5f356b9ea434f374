"""Command line toolkit.

File formats
------------
Points file: one point per line, whitespace-separated integers.  An
optional first line "dim <d>" fixes the dimension (default 2).  A '#'
starts a comment; blank lines are ignored; duplicate points are an error.

Covariogram file: a required "dim <d>" line, then one entry per line as
d coordinates and a positive count.  Entries are sorted, and both u and
-u must be present.  Serialization is unique, so parse and serialize
round-trip bit-exactly.

Exit codes: 0 success or affirmative verdict, 1 negative verdict
(check-convex false, affine-equiv none, verify-thm22 mismatch),
2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys

from .covariogram import Covariogram, compute_covariogram, support_of
from .homometry import (
    HexagonParams,
    WidthOneParams,
    condition_i,
    condition_ii,
    corollary_pair_generator,
    decompose_plane,
    product_pair,
)
from .invariants import invariants_direct
from .lattice import (
    LatticeError,
    affine_equivalent,
    canonical_form,
    difference_set,
    is_lattice_convex,
    point_set,
)
from .reconstruct import (
    determination_verdict,
    edge_pair_from_covariogram,
    invariants_from_covariogram,
    reconstruct_all,
)
from .search import homometric_classes

COORD_LIMIT = 2 ** 31


class FormatError(Exception):
    """Malformed input file; message carries file and line number."""


def _strip_comment(line: str) -> str:
    pos = line.find("#")
    return line if pos < 0 else line[:pos]


def _int_fields(path, lineno, text):
    out = []
    for tok in text.split():
        try:
            v = int(tok)
        except ValueError:
            raise FormatError(f"{path}:{lineno}: not an integer: {tok!r}") from None
        if abs(v) > COORD_LIMIT:
            raise FormatError(f"{path}:{lineno}: coordinate out of range")
        out.append(v)
    return out


def parse_points(text: str, path: str = "<points>") -> frozenset:
    dim = None
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if dim is None and not pts and line.split()[0] == "dim":
            fields = line.split()
            if len(fields) != 2 or not fields[1].isdigit() or int(fields[1]) < 1:
                raise FormatError(f"{path}:{lineno}: bad dim header")
            dim = int(fields[1])
            continue
        vals = _int_fields(path, lineno, line)
        if dim is None:
            dim = 2
        if len(vals) != dim:
            raise FormatError(f"{path}:{lineno}: expected {dim} coordinates")
        p = tuple(vals)
        if p in pts:
            raise FormatError(f"{path}:{lineno}: duplicate point")
        pts.append(p)
    if not pts:
        raise FormatError(f"{path}:1: no points")
    return frozenset(pts)


def serialize_points(points) -> str:
    pts = sorted(point_set(points))
    dim = len(pts[0])
    lines = [f"dim {dim}"]
    lines += [" ".join(str(c) for c in p) for p in pts]
    return "\n".join(lines) + "\n"


def parse_covariogram(text: str, path: str = "<covariogram>") -> Covariogram:
    dim = None
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if dim is None:
            fields = line.split()
            if fields[0] != "dim" or len(fields) != 2 or not fields[1].isdigit():
                raise FormatError(f"{path}:{lineno}: missing dim header")
            dim = int(fields[1])
            if dim < 1:
                raise FormatError(f"{path}:{lineno}: bad dimension")
            continue
        vals = _int_fields(path, lineno, line)
        if len(vals) != dim + 1:
            raise FormatError(
                f"{path}:{lineno}: expected {dim} coordinates and a count")
        u = tuple(vals[:dim])
        if u in entries:
            raise FormatError(f"{path}:{lineno}: duplicate vector")
        if vals[dim] <= 0:
            raise FormatError(f"{path}:{lineno}: count must be positive")
        entries[u] = vals[dim]
    if dim is None:
        raise FormatError(f"{path}:1: missing dim header")
    try:
        return Covariogram(dim, entries)
    except LatticeError as exc:
        raise FormatError(f"{path}:1: {exc}") from None


def serialize_covariogram(g: Covariogram) -> str:
    lines = [f"dim {g.dim}"]
    for u in sorted(g.entries):
        lines.append(" ".join(str(c) for c in u) + f" {g.entries[u]}")
    return "\n".join(lines) + "\n"


def _load_points(path) -> frozenset:
    return parse_points(_read(path), path)


def _load_cov(path) -> Covariogram:
    return parse_covariogram(_read(path), path)


def _read(path) -> str:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"{path}:0: {exc.strerror or exc}") from None


def _fmt_point(p) -> str:
    return ",".join(str(c) for c in p)


def _fmt_set(points) -> str:
    return ";".join(_fmt_point(p) for p in sorted(points))


def _fmt_matrix(m) -> str:
    return ",".join(str(c) for row in m for c in row)


def _fmt_scalar(v) -> str:
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v == float("inf"):
        return "inf"
    return str(v)


class Emitter:
    """key=value output; human mode adds a blank line between sections."""

    def __init__(self, records: bool):
        self.records = records

    def field(self, key, value):
        print(f"{key}={value}")

    def section(self, title):
        if not self.records:
            print(f"# {title}")


def _invariant_fields(emit: Emitter, rec) -> None:
    emit.field("normals", _fmt_set(rec.normals))
    emit.field("m_prime", _fmt_scalar(rec.m_prime))
    emit.field("m_doubleprime", _fmt_scalar(rec.m_doubleprime))
    emit.field("m", _fmt_scalar(rec.m))
    emit.field("delta", f"{rec.delta.numerator}/{rec.delta.denominator}")
    emit.field("det_set", ",".join(str(d) for d in sorted(rec.det_set)))
    emit.field("certified", _fmt_scalar(rec.certified))


def _parse_box(text):
    parts = text.lower().split("x")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"--box expects WxH, got {text!r}")
    w, h = int(parts[0]), int(parts[1])
    if w < 1 or h < 1:
        raise FormatError("--box dimensions must be positive")
    return w, h


def _parse_pair(text, flag):
    parts = text.split(",")
    if len(parts) != 2:
        raise FormatError(f"{flag} expects x,y, got {text!r}")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError:
        raise FormatError(f"{flag} expects integers, got {text!r}") from None


def _parse_hex(text):
    parts = text.split(",")
    if len(parts) != 6:
        raise FormatError(f"--hex expects a1,a2,b1,b2,g1,g2, got {text!r}")
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"--hex expects integers, got {text!r}") from None
    return HexagonParams(*vals)


def _cmd_compute_cov(args, emit):
    K = _load_points(args.points)
    sys.stdout.write(serialize_covariogram(compute_covariogram(K)))
    return 0


def _cmd_diffset(args, emit):
    if args.from_cov:
        d = support_of(_load_cov(args.points))
    else:
        d = difference_set(_load_points(args.points))
    sys.stdout.write(serialize_points(d))
    return 0


def _cmd_invariants(args, emit):
    if args.from_cov:
        rec = invariants_from_covariogram(_load_cov(args.points))
    else:
        rec = invariants_direct(_load_points(args.points))
    _invariant_fields(emit, rec)
    return 0


def _cmd_edges(args, emit):
    g = _load_cov(args.covariogram)
    sketch = edge_pair_from_covariogram(g, _parse_pair(args.normal, "--normal"))
    emit.field("normal", _fmt_point(sketch.normal))
    emit.field("long_row", _fmt_set(sketch.long_row))
    emit.field("short_row", _fmt_set(sketch.short_row))
    return 0


def _cmd_reconstruct(args, emit):
    g = _load_cov(args.covariogram)
    box = _parse_box(args.box) if args.box else (None, None)
    hits = reconstruct_all(g, box[0], box[1], jobs=args.jobs)
    emit.field("verdict", determination_verdict(g, box[0], box[1], jobs=args.jobs))
    emit.field("class_count", len(hits))
    for i, K in enumerate(hits):
        emit.field(f"class.{i}", _fmt_set(K))
    return 0


def _cmd_check_convex(args, emit):
    verdict = is_lattice_convex(_load_points(args.points))
    emit.field("lattice_convex", _fmt_scalar(verdict))
    return 0 if verdict else 1


def _cmd_canonical(args, emit):
    sys.stdout.write(serialize_points(canonical_form(_load_points(args.points))))
    return 0


def _cmd_affine_equiv(args, emit):
    fn = affine_equivalent(_load_points(args.first), _load_points(args.second))
    if fn is None:
        emit.field("equivalent", "false")
        return 1
    emit.field("equivalent", "true")
    emit.field("matrix", _fmt_matrix(fn.matrix))
    emit.field("shift", _fmt_point(fn.shift))
    return 0


def _pair_report(emit, report, out_prefix):
    emit.field("homometric", _fmt_scalar(report.homometric))
    emit.field("nontrivial", _fmt_scalar(report.nontrivial))
    if out_prefix:
        for tag, pts in (("plus", report.first), ("minus", report.second)):
            path = f"{out_prefix}-{tag}.pts"
            with open(path, "w", encoding="ascii") as fh:
                fh.write(serialize_points(pts))
            emit.field(f"wrote_{tag}", path)
    else:
        emit.field("first", _fmt_set(report.first))
        emit.field("second", _fmt_set(report.second))
    return 0


def _cmd_gen_pair(args, emit):
    params = WidthOneParams(args.k, args.l)
    report = corollary_pair_generator(params, _parse_hex(args.hex))
    emit.field("k", params.k)
    emit.field("l", params.ell)
    emit.field("base", _fmt_set(report.base))
    return _pair_report(emit, report, args.out)


def _cmd_verify_thm22(args, emit):
    params = WidthOneParams(args.k, args.l)
    S = _load_points(args.points)
    ci = condition_i(S, params)
    cii = condition_ii(S, params)
    emit.field("condition_i", _fmt_scalar(ci))
    emit.field("condition_ii", _fmt_scalar(cii))
    emit.field("agree", _fmt_scalar(ci == cii))
    return 0 if ci == cii else 1


def _cmd_product_pair(args, emit):
    report = product_pair(_load_points(args.first), _load_points(args.second))
    emit.field("dim", len(next(iter(report.first))))
    return _pair_report(emit, report, args.out)


def _cmd_search(args, emit):
    w, h = _parse_box(args.box)
    report = homometric_classes(w, h, jobs=args.jobs,
                                match=args.match_corollary,
                                allow_large=args.allow_large)
    emit.field("box_width", report.width)
    emit.field("box_height", report.height)
    emit.field("total_sets", report.total_classes)
    emit.field("class_count", len(report.classes))
    for ci, cls in enumerate(report.classes):
        emit.section(f"class {ci}")
        emit.field(f"class.{ci}.size", len(cls.members))
        for mi, member in enumerate(cls.members):
            emit.field(f"class.{ci}.member.{mi}", _fmt_set(member))
        for pi, pair in enumerate(cls.pairs):
            prefix = f"class.{ci}.pair.{pi}"
            a = cls.members.index(pair.first)
            b = cls.members.index(pair.second)
            emit.field(f"{prefix}.members", f"{a},{b}")
            if not args.match_corollary:
                continue
            if pair.match is None:
                emit.field(f"{prefix}.verdict", "unmatched")
                print("warning: unmatched homometric pair "
                      "(candidate new example)", file=sys.stderr)
            else:
                m = pair.match
                emit.field(f"{prefix}.verdict", "matched")
                emit.field(f"{prefix}.k", m.params.k)
                emit.field(f"{prefix}.l", m.params.ell)
                emit.field(f"{prefix}.hex",
                           f"{m.hexagon.a1},{m.hexagon.a2},{m.hexagon.b1},"
                           f"{m.hexagon.b2},{m.hexagon.g1},{m.hexagon.g2}")
                emit.field(f"{prefix}.matrix", _fmt_matrix(m.first_map.matrix))
                emit.field(f"{prefix}.shift", _fmt_point(m.first_map.shift))
                emit.field(f"{prefix}.shift2", _fmt_point(m.second_map.shift))
                emit.field(f"{prefix}.swapped", _fmt_scalar(m.swapped))
    return 0


def _cmd_decompose(args, emit):
    params = WidthOneParams(args.k, args.l)
    lam, t = decompose_plane(_parse_pair(args.point, "--point"), params)
    emit.field("sublattice_part", _fmt_point(lam))
    emit.field("strip_part", _fmt_point(t))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="latcov",
        description="Exact covariogram toolkit for lattice-convex planar sets.")
    ap.add_argument("--format", choices=("human", "records"), default="human",
                    help="output style; records is stable key=value lines")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute-cov", help="covariogram of a points file")
    p.add_argument("points")
    p.set_defaults(fn=_cmd_compute_cov)

    p = sub.add_parser("diffset", help="difference set of a points file")
    p.add_argument("points")
    p.add_argument("--from-cov", action="store_true",
                   help="read a covariogram file and print its support")
    p.set_defaults(fn=_cmd_diffset)

    p = sub.add_parser("invariants", help="edge-normal invariant record")
    p.add_argument("points")
    p.add_argument("--from-cov", action="store_true",
                   help="read a covariogram file instead of points")
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("edges", help="boundary row pair from a covariogram")
    p.add_argument("covariogram")
    p.add_argument("--normal", required=True, metavar="UX,UY")
    p.set_defaults(fn=_cmd_edges)

    p = sub.add_parser("reconstruct",
                       help="all realizing sets of a covariogram, up to class")
    p.add_argument("covariogram")
    p.add_argument("--box", metavar="WxH",
                   help="search box (default: support bounding box)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_reconstruct)

    p = sub.add_parser("check-convex", help="lattice convexity predicate")
    p.add_argument("points")
    p.set_defaults(fn=_cmd_check_convex)

    p = sub.add_parser("canonical",
                       help="representative up to translation and reflection")
    p.add_argument("points")
    p.set_defaults(fn=_cmd_canonical)

    p = sub.add_parser("affine-equiv",
                       help="unimodular affine map between two points files")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(fn=_cmd_affine_equiv)

    p = sub.add_parser("gen-pair",
                       help="hexagon-family mirror pair for a width-one strip")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--hex", required=True, metavar="A1,A2,B1,B2,G1,G2")
    p.add_argument("--out", metavar="PREFIX",
                   help="write PREFIX-plus.pts and PREFIX-minus.pts")
    p.set_defaults(fn=_cmd_gen_pair)

    p = sub.add_parser("verify-thm22",
                       help="equivalence of the direct-sum and shape conditions")
    p.add_argument("points")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(fn=_cmd_verify_thm22)

    p = sub.add_parser("product-pair",
                       help="mirror pair of a cartesian product of two sets")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--out", metavar="PREFIX",
                   help="write PREFIX-plus.pts and PREFIX-minus.pts")
    p.set_defaults(fn=_cmd_product_pair)

    p = sub.add_parser("search", help="homometric pair search over a box")
    p.add_argument("--box", required=True, metavar="WxH")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--match-corollary", action="store_true",
                   help="match every found pair against the hexagon family")
    p.add_argument("--allow-large", action="store_true",
                   help="lift the desk-scale box limit")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("decompose",
                       help="split a point into sublattice and strip parts")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--point", required=True, metavar="X,Y")
    p.set_defaults(fn=_cmd_decompose)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    emit = Emitter(records=(args.format == "records"))
    try:
        return args.fn(args, emit)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
