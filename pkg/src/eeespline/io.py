"""JSON file formats for partitions and spline bases.

Rationals are written as strings ("3", "-2/7") so files stay exact.  Every
document carries ``"format": 1``.
"""
from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path

from .conformality import Spline, SplineBasis, dimension_oracle
from .errors import ParseError, PartitionError, VerificationFailed
from .partition import Partition, build_partition
from .poly import BivariatePoly

FORMAT = 1


def parse_rational(v) -> Fraction:
    if isinstance(v, bool):
        raise ParseError(f"not a rational: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational: {v!r}") from None
    raise ParseError(f"coordinates must be integers or 'p/q' strings, got {v!r}")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def _load_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    if doc.get("format", FORMAT) != FORMAT:
        raise ParseError(f"{path}: unsupported format {doc.get('format')!r}")
    return doc


# partitions ------------------------------------------------------------

def partition_from_doc(doc: dict) -> Partition:
    try:
        raw_v, raw_e = doc["vertices"], doc["edges"]
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(raw_v, list) or not isinstance(raw_e, list):
        raise ParseError("vertices and edges must be lists")
    pts = []
    for v in raw_v:
        if not isinstance(v, list) or len(v) != 2:
            raise ParseError(f"vertex must be [x, y], got {v!r}")
        pts.append((parse_rational(v[0]), parse_rational(v[1])))
    seen, edges = set(), []
    for e in raw_e:
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(i, int) and not isinstance(i, bool) for i in e)):
            raise ParseError(f"edge must be [i, j], got {e!r}")
        i, j = e
        if not (0 <= i < len(pts) and 0 <= j < len(pts)) or i == j:
            raise ParseError(f"edge {e!r} has a bad vertex index")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ParseError(f"duplicate edge {e!r}")
        seen.add(key)
        edges.append(key)
    return build_partition(pts, edges, name=str(doc.get("name", "")))


def partition_to_doc(p: Partition) -> dict:
    doc = {"format": FORMAT, "name": p.name}
    doc.update(p.fingerprint_doc())
    return doc


def read_partition(path) -> Partition:
    return partition_from_doc(_load_json(path))


def fingerprint(p: Partition) -> str:
    blob = json.dumps(p.fingerprint_doc(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


# bases -----------------------------------------------------------------

def basis_to_doc(basis: SplineBasis) -> dict:
    p = basis.partition
    d, mu = basis[0].d, basis[0].mu
    funcs = []
    for s, label in zip(basis.functions, basis.labels):
        funcs.append({"label": [str(x) for x in label],
                      "cells": {str(c): [format_rational(x) for x in poly.to_vector(d)]
                                for c, poly in enumerate(s.polys)}})
    return {"format": FORMAT, "fingerprint": fingerprint(p), "partition": partition_to_doc(p),
            "degree": d, "smoothness": mu, "route": str(basis.provenance.get("route", "")),
            "functions": funcs}


def basis_from_doc(doc: dict) -> SplineBasis:
    try:
        pdoc, d, mu, funcs = doc["partition"], doc["degree"], doc["smoothness"], doc["functions"]
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from None
    try:
        p = partition_from_doc(pdoc)
    except PartitionError as exc:
        raise ParseError(f"embedded partition is invalid: {exc}") from None
    if fingerprint(p) != doc.get("fingerprint"):
        raise VerificationFailed("partition fingerprint does not match")
    if not isinstance(d, int) or not isinstance(mu, int) or not 0 <= mu <= d:
        raise ParseError("bad degree/smoothness")
    n = (d + 1) * (d + 2) // 2
    splines, labels = [], []
    for k, f in enumerate(funcs):
        cells = f.get("cells", {}) if isinstance(f, dict) else {}
        if sorted(cells, key=lambda s: int(s) if s.isdigit() else -1) != [str(c) for c in range(len(p.cells))]:
            raise ParseError(f"function {k}: expected one entry per cell")
        polys = []
        for c in range(len(p.cells)):
            coeffs = cells[str(c)]
            if not isinstance(coeffs, list) or len(coeffs) != n:
                raise ParseError(f"function {k}, cell {c}: expected {n} coefficients")
            polys.append(BivariatePoly.from_vector([parse_rational(x) for x in coeffs], d))
        splines.append(Spline(p, d, mu, tuple(polys)))
        labels.append(tuple(f.get("label", [])))
    if not splines:
        raise ParseError("basis has no functions")
    return SplineBasis(splines, labels, {"route": doc.get("route", "")})


def write_basis(basis: SplineBasis, path) -> None:
    Path(path).write_text(dumps(basis_to_doc(basis)))


def read_basis(path) -> SplineBasis:
    return basis_from_doc(_load_json(path))


def verify_basis_file(basis: SplineBasis) -> list:
    """Problems found when re-checking a basis; empty means it is a basis."""
    problems = []
    d, mu = basis[0].d, basis[0].mu
    for k, s in enumerate(basis):
        bad = s.edge_violations()
        if bad:
            problems.append(f"function {k}: smoothness fails on edges {bad}")
    if not basis.is_independent():
        problems.append("functions are linearly dependent")
    dim = dimension_oracle(basis.partition, d, mu)
    if len(basis) != dim:
        problems.append(f"{len(basis)} functions but the space has dimension {dim}")
    return problems
