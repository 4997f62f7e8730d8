"""Command-line interface.

Exit status: 0 success, 2 usage or degree/smoothness error, 3 unreadable
input, 4 invalid partition, 5 non-convex domain, 6 wrong partition class or
refinement, 7 point outside the domain, 8 index out of range, 9 internal
disagreement or invalid basis, 10 basis file failed verification.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .conformality import dimension_oracle, qcc_basis
from .dimension import dim_quasi_cross_cut
from .eee import dimension_via_eee, run_pipeline
from .errors import IndexOutOfRange, Outside, ParseError, SplineError, VerificationFailed
from .extend import extend
from .io import (dumps, format_rational, parse_rational, partition_to_doc, read_basis,
                 read_partition, verify_basis_file, write_basis, basis_to_doc)
from .partition import PartitionClass, cells_containing, classify_segments

EXIT_DISAGREEMENT = 9


def _emit(args, text: str, doc: dict) -> None:
    if getattr(args, "format", "text") == "json":
        sys.stdout.write(dumps(doc))
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _pick(basis, index):
    if index is None:
        return list(range(len(basis)))
    if not 0 <= index < len(basis):
        raise IndexOutOfRange(f"function index {index} out of range 0..{len(basis) - 1}")
    return [index]


def _point_arg(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected X,Y, got {text!r}")
    return tuple(_rational_arg(t) for t in parts)


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# subcommands -------------------------------------------------------------

def cmd_dim(args) -> int:
    p = read_partition(args.partition)
    d, mu = args.degree, args.smoothness
    _, kind = classify_segments(p)
    methods = ("formula", "oracle", "eee") if args.method == "all" else (args.method,)
    values = {}
    for m in methods:
        if m == "formula":
            if args.method == "all" and kind is PartitionClass.GENERAL:
                values[m] = None
            else:
                values[m] = dim_quasi_cross_cut(p, d, mu)
        elif m == "oracle":
            values[m] = dimension_oracle(p, d, mu)
        else:
            values[m] = dimension_via_eee(p, d, mu, args.strategy)
    known = {v for v in values.values() if v is not None}
    agree = len(known) <= 1
    lines = [f"partition: {p.name or args.partition} ({kind.value})", f"degree {d}, smoothness {mu}"]
    lines += [f"{m}: {'n/a' if v is None else v}" for m, v in values.items()]
    if args.method == "all":
        lines.append("agreement: " + ("yes" if agree else "NO"))
    doc = {"partition": p.name, "class": kind.value, "degree": d, "smoothness": mu,
           "values": values, "agree": agree}
    _emit(args, "\n".join(lines), doc)
    return 0 if agree else EXIT_DISAGREEMENT


def cmd_basis(args) -> int:
    p = read_partition(args.partition)
    basis = run_pipeline(p, args.degree, args.smoothness, args.strategy)
    doc = basis_to_doc(basis)
    if args.out:
        write_basis(basis, args.out)
        n_poly = sum(s.is_global_polynomial() for s in basis)
        print(f"wrote {len(basis)} functions ({n_poly} global polynomials) to {args.out}",
              file=sys.stderr)
    else:
        sys.stdout.write(dumps(doc))
    return 0


def cmd_extend(args) -> int:
    p = read_partition(args.partition)
    ep = extend(p, args.strategy)
    q = ep.extended
    added = [[[format_rational(c) for c in q.vertices[v]] for v in q.edges[e]] for e in ep.added_subedges]
    doc = partition_to_doc(q)
    doc["added_subedges"] = added
    doc["extensions"] = ep.s
    doc["strategy"] = ep.strategy
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps(doc))
    kind = classify_segments(q)[1].value
    lines = [f"{ep.s} extensions, {len(added)} added sub-edges, result is {kind}",
             f"{len(q.vertices)} vertices, {len(q.edges)} edges, {len(q.cells)} cells"]
    for a, b in added:
        lines.append(f"  ({a[0]}, {a[1]}) -- ({b[0]}, {b[1]})")
    if args.out or args.format == "text":
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(dumps(doc))
    return 0


def cmd_eval(args) -> int:
    basis = read_basis(args.basis)
    pt = args.point
    cells = cells_containing(basis.partition, pt)
    if not cells:
        raise Outside(f"point ({pt[0]}, {pt[1]}) is outside the domain")
    out = {i: basis[i].polys[cells[0]](*pt) for i in _pick(basis, args.index)}
    text = "\n".join(f"{i}: {format_rational(v)}" if args.index is None else format_rational(v)
                     for i, v in out.items())
    _emit(args, text, {"point": [format_rational(c) for c in pt], "cell": cells[0],
                       "values": {str(i): format_rational(v) for i, v in out.items()}})
    return 0


def cmd_sample(args) -> int:
    basis = read_basis(args.basis)
    idx = _pick(basis, args.index)
    p = basis.partition
    n = args.grid
    if n < 2:
        raise SplineError("grid must be at least 2")
    xs = [v[0] for v in p.vertices]
    ys = [v[1] for v in p.vertices]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    out = sys.stdout
    out.write("x,y," + ",".join(f"f{i}" for i in idx) + "\n")
    for j in range(n):
        y = y0 + (y1 - y0) * Fraction(j, n - 1)
        for i in range(n):
            x = x0 + (x1 - x0) * Fraction(i, n - 1)
            cells = cells_containing(p, (x, y))
            if not cells:
                continue
            vals = [basis[k].polys[cells[0]](x, y) for k in idx]
            out.write(f"{float(x)!r},{float(y)!r}," + ",".join(repr(float(v)) for v in vals) + "\n")
    return 0


def cmd_svg(args) -> int:
    from .render import render_svg

    basis = read_basis(args.basis)
    index = 0 if args.index is None else args.index
    (k,) = _pick(basis, index)
    svg = render_svg(basis[k], args.grid, title=f"function {k}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def cmd_check(args) -> int:
    basis = read_basis(args.basis)
    problems = verify_basis_file(basis)
    if problems:
        raise VerificationFailed("; ".join(problems))
    d = basis[0].d
    _emit(args, f"ok: {len(basis)} functions form a basis of S_{d}^{basis[0].mu}",
          {"ok": True, "functions": len(basis)})
    return 0


def cmd_d1_basis(args) -> int:
    from .spline1d import KnotVector, coarse_basis_1d

    d, mu = args.degree, args.smoothness
    coarse = KnotVector.of(args.coarse, d, mu)
    fine = KnotVector.of(sorted(set(args.coarse) | set(args.fine or [])), d, mu)
    vecs = coarse_basis_1d(fine, coarse)
    text = "\n".join(" ".join(format_rational(c) for c in v) for v in vecs)
    _emit(args, f"fine knots: {' '.join(map(format_rational, fine.knots))}\n{text}",
          {"fine_knots": [format_rational(t) for t in fine.knots],
           "coefficients": [[format_rational(c) for c in v] for v in vecs]})
    return 0


def cmd_d1_eval(args) -> int:
    from .spline1d import KnotVector, bspline_eval

    kv = KnotVector.of(args.breakpoints, args.degree, args.smoothness)
    if not 0 <= args.index < len(kv):
        raise IndexOutOfRange(f"B-spline index {args.index} out of range 0..{len(kv) - 1}")
    v = bspline_eval(kv, args.index, args.x, args.derivative, args.side)
    _emit(args, format_rational(v), {"value": format_rational(v)})
    return 0


# parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eeespline", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def space(p):
        p.add_argument("-d", "--degree", type=int, required=True)
        p.add_argument("-s", "--smoothness", type=int, required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    def strategy(p):
        p.add_argument("--strategy", choices=("qcc", "crosscut"), default="qcc")

    p = sub.add_parser("dim", help="dimension of a spline space")
    p.add_argument("partition")
    space(p)
    p.add_argument("--method", choices=("formula", "oracle", "eee", "all"), default="all")
    strategy(p)
    fmt(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("basis", help="construct a basis and write it as JSON")
    p.add_argument("partition")
    space(p)
    strategy(p)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("extend", help="extend a partition to (quasi-)cross-cut form")
    p.add_argument("partition")
    strategy(p)
    p.add_argument("-o", "--out")
    fmt(p)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("eval", help="exact value of basis functions at a point")
    p.add_argument("basis")
    p.add_argument("--point", type=_point_arg, required=True, metavar="X,Y",
                   help="rational coordinates, e.g. 1/3,-5/2")
    p.add_argument("-i", "--index", type=int)
    fmt(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sample", help="CSV samples on an n x n grid")
    p.add_argument("basis")
    p.add_argument("-i", "--index", type=int)
    p.add_argument("--grid", type=int, default=11)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("svg", help="heatmap of one basis function")
    p.add_argument("basis")
    p.add_argument("-i", "--index", type=int)
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_svg)

    p = sub.add_parser("check", help="re-verify a basis file")
    p.add_argument("basis")
    fmt(p)
    p.set_defaults(func=cmd_check)

    d1 = sub.add_parser("d1", help="univariate splines").add_subparsers(dest="d1_command", required=True)
    p = d1.add_parser("basis", help="coarse basis in terms of fine B-splines")
    space(p)
    p.add_argument("--coarse", nargs="+", type=_rational_arg, required=True)
    p.add_argument("--fine", nargs="*", type=_rational_arg, help="extra breakpoints")
    fmt(p)
    p.set_defaults(func=cmd_d1_basis)
    p = d1.add_parser("eval", help="exact B-spline value or derivative")
    space(p)
    p.add_argument("--breakpoints", nargs="+", type=_rational_arg, required=True)
    p.add_argument("-i", "--index", type=int, required=True)
    p.add_argument("-x", type=_rational_arg, required=True, help="use -x=-1/2 for negatives")
    p.add_argument("-r", "--derivative", type=int, default=0)
    p.add_argument("--side", choices=("right", "left"), default="right")
    fmt(p)
    p.set_defaults(func=cmd_d1_eval)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SplineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
