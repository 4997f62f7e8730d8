"""Edge elimination: recover a basis of the original space from the extended one.

Across every sub-edge added by the extension, a combination of extended
basis functions must have zero jump (a degree-d piecewise polynomial that is
C^d across a line is one polynomial there).  Stacking those conditions gives a
matrix M whose nullspace parametrizes the spline space of the base partition.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .conformality import Spline, SplineBasis, check_degree, combine, dimension_oracle, qcc_basis
from .dimension import dim_quasi_cross_cut
from .errors import NotABasis
from .exact import RatMatrix, nullspace_basis, rank
from .extend import ExtendedPartition, extend
from .poly import directional_derivative, monomials, restrict_to_line


@dataclass(frozen=True, eq=False)
class EEEMatrix:
    matrix: RatMatrix
    row_labels: tuple   # (sub-edge, kind, detail)
    column_labels: tuple

    @property
    def rank(self) -> int:
        return rank(self.matrix)

    def nullspace(self) -> list:
        return nullspace_basis(self.matrix)

    def nonzero_columns(self) -> list:
        return [j for j in range(self.matrix.cols) if any(self.matrix.column(j))]


def verify_basis(p, basis: SplineBasis, d: int, mu: int) -> None:
    """Raise NotABasis unless basis is a basis of S_d^mu(p)."""
    for k, s in enumerate(basis):
        if s.partition is not p or s.d != d or s.mu != mu:
            raise NotABasis(f"function {k} lives on a different space")
        if not s.is_valid():
            raise NotABasis(f"function {k} is not a C^{mu} spline")
    if not basis.is_independent():
        raise NotABasis("functions are linearly dependent")
    expected = dimension_oracle(p, d, mu)
    if len(basis) != expected:
        raise NotABasis(f"{len(basis)} functions for a space of dimension {expected}")


def _jumps(ep: ExtendedPartition, basis: SplineBasis, e: int) -> list:
    return [s.jump(e) for s in basis]


def assemble_eee(ep: ExtendedPartition, basis: SplineBasis, check: bool = True) -> EEEMatrix:
    """Rows equate every monomial coefficient of the combined jump to zero."""
    first = basis[0]
    d, mu = first.d, first.mu
    if check:
        verify_basis(ep.extended, basis, d, mu)
    rows, labels = [], []
    for e in ep.added_subedges:
        vecs = [J.to_vector(d) for J in _jumps(ep, basis, e)]
        for k, mono in enumerate(monomials(d)):
            rows.append([v[k] for v in vecs])
            labels.append((e, "coefficient", mono))
    m = RatMatrix.from_rows(rows, len(basis))
    return EEEMatrix(m, tuple(labels), tuple(basis.labels))


def assemble_eee_directional(ep: ExtendedPartition, basis: SplineBasis) -> EEEMatrix:
    """Rows from normal derivatives of order mu+1..d of the jump, restricted to the edge line."""
    first = basis[0]
    d, mu = first.d, first.mu
    p = ep.extended
    rows, labels = [], []
    for e in ep.added_subedges:
        line = p.lines[e]
        jumps = _jumps(ep, basis, e)
        for r in range(mu + 1, d + 1):
            restricted = [restrict_to_line(directional_derivative(J, line.normal, r), line)
                          for J in jumps]
            for k in range(d - r + 1):
                rows.append([u.padded(d - r + 1)[k] for u in restricted])
                labels.append((e, "derivative", (r, k)))
    m = RatMatrix.from_rows(rows, len(basis))
    return EEEMatrix(m, tuple(labels), tuple(basis.labels))


def _merge_to_base(ep: ExtendedPartition, s: Spline, check: bool) -> Spline:
    polys = [None] * len(ep.base.cells)
    for c, b in enumerate(ep.cell_to_base):
        if polys[b] is None:
            polys[b] = s.polys[c]
        elif check and polys[b] != s.polys[c]:
            raise NotABasis(f"combination is not a single polynomial on base cell {b}")
    return Spline(ep.base, s.d, s.mu, tuple(polys))


def synthesize_basis(ep: ExtendedPartition, basis: SplineBasis, m: EEEMatrix,
                     check: bool = True) -> SplineBasis:
    """Nullspace combinations of the extended basis, re-expressed on the base cells."""
    funcs, labels, coeffs = [], [], []
    for j, c in enumerate(m.nullspace()):
        merged = _merge_to_base(ep, combine(basis.functions, c), check)
        funcs.append(merged)
        labels.append(("eee", j))
        coeffs.append(c)
    prov = dict(basis.provenance)
    prov.update({"route": "eee", "strategy": ep.strategy, "added_subedges": len(ep.added_subedges),
                 "extended_labels": list(basis.labels), "coefficients": coeffs,
                 "eee_rank": m.rank})
    return SplineBasis(funcs, labels, prov)


def dimension_via_eee(p, d: int, mu: int, strategy: str = "qcc") -> int:
    check_degree(d, mu)
    ep = extend(p, strategy)
    basis = qcc_basis(ep, d, mu)
    m = assemble_eee(ep, basis, check=False)
    return dim_quasi_cross_cut(ep.extended, d, mu) - m.rank


def run_pipeline(p, d: int, mu: int, strategy: str = "qcc", check: bool = True) -> SplineBasis:
    """Extend, build the extended basis, eliminate added edges, merge back."""
    check_degree(d, mu)
    ep = extend(p, strategy)
    basis = qcc_basis(ep, d, mu)
    m = assemble_eee(ep, basis, check=check)
    return synthesize_basis(ep, basis, m, check=check)
