"""Smoothing-cofactor engine.

A spline in S_d^mu over a simply connected partition is fixed by its
polynomial on one source cell plus, for every interior edge e with line L_e,
a cofactor q_e of degree d - mu - 1 such that the jump across e (positive
side minus negative side) equals q_e * L_e^(mu + 1).  The jumps are
consistent exactly when, around every interior vertex, the signed sum of
q_e * L_e^(mu + 1) vanishes.  This module assembles that linear system,
measures its solution space, and turns solutions into per-cell polynomials
by integrating jumps along a spanning tree of the dual graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import DegreeSmoothnessOrder, NotASolution, NotQuasiCrossCut
from .exact import RatMatrix, nullspace_basis, rank
from .partition import (Partition, PartitionClass, SegmentClass, cells_containing,
                        classify_segments, dual_spanning_tree)
from .poly import BivariatePoly, LineForm, dim_poly, divide_by_line_power, monomials


def check_degree(d: int, mu: int) -> None:
    if d < 0 or mu < 0 or mu > d:
        raise DegreeSmoothnessOrder(f"need 0 <= mu <= d, got d={d}, mu={mu}")


def _power_products(line: LineForm, d: int, mu: int) -> list:
    """Coefficient vectors (degree d) of m * L^(mu+1) for each monomial m of degree <= d-mu-1."""
    Lp = line.poly() ** (mu + 1)
    return [(BivariatePoly.monomial(a, b) * Lp).to_vector(d) for a, b in monomials(d - mu - 1)]


@dataclass(frozen=True, eq=False)
class CofactorSystem:
    partition: Partition
    d: int
    mu: int
    matrix: RatMatrix
    edge_offset: dict   # interior edge -> first column of its cofactor block

    @property
    def n_source(self) -> int:
        return dim_poly(self.d)

    @property
    def n_cofactor(self) -> int:
        return dim_poly(self.d - self.mu - 1)

    @property
    def n_unknowns(self) -> int:
        return self.matrix.cols

    def cofactor(self, vector: Sequence, e: int) -> BivariatePoly:
        k = self.edge_offset[e]
        return BivariatePoly.from_vector(vector[k:k + self.n_cofactor], self.d - self.mu - 1) \
            if self.n_cofactor else BivariatePoly()

    def source_poly(self, vector: Sequence) -> BivariatePoly:
        return BivariatePoly.from_vector(vector[:self.n_source], self.d)

    def is_solution(self, vector: Sequence) -> bool:
        return all(x == 0 for x in self.matrix.matvec(vector))

    def solution_dimension(self) -> int:
        return self.matrix.cols - rank(self.matrix)


def assemble_conformality(p: Partition, d: int, mu: int) -> CofactorSystem:
    check_degree(d, mu)
    n0, nq = dim_poly(d), dim_poly(d - mu - 1)
    offsets = {}
    col = n0
    for e in p.interior_edges:
        offsets[e] = col
        col += nq
    products = {e: _power_products(p.lines[e], d, mu) for e in p.interior_edges} if nq else {}
    rows = []
    for v in p.interior_vertices:
        block = [[Fraction(0)] * col for _ in range(n0)]
        for e in p.vertex_edges[v]:
            if e not in offsets or not nq:
                continue
            sign = p.crossing_sign(e, v)
            for j, vec in enumerate(products[e]):
                for k, c in enumerate(vec):
                    if c:
                        block[k][offsets[e] + j] += sign * c
        rows.extend(block)
    return CofactorSystem(p, d, mu, RatMatrix.from_rows(rows, col), offsets)


def dimension_oracle(p: Partition, d: int, mu: int) -> int:
    """dim S_d^mu(p) from the rank of the conformality system."""
    return assemble_conformality(p, d, mu).solution_dimension()


@dataclass(frozen=True, eq=False)
class Spline:
    partition: Partition
    d: int
    mu: int
    polys: tuple  # BivariatePoly per cell

    def jump(self, e: int) -> BivariatePoly:
        p = self.partition
        return self.polys[p.positive_cell(e)] - self.polys[p.negative_cell(e)]

    def cofactor(self, e: int):
        """q with jump(e) = q * L_e^(mu+1), or None if the jump is not divisible."""
        return divide_by_line_power(self.jump(e), self.partition.lines[e], self.mu + 1)

    def edge_violations(self, edges=None) -> list:
        """Interior edges whose jump is not q * L^(mu+1) with deg q <= d - mu - 1."""
        bad = []
        for e in (self.partition.interior_edges if edges is None else edges):
            q = self.cofactor(e)
            if q is None or q.degree() > self.d - self.mu - 1:
                bad.append(e)
        return bad

    def is_valid(self) -> bool:
        return all(poly.degree() <= self.d for poly in self.polys) and not self.edge_violations()

    def __call__(self, x, y):
        cells = cells_containing(self.partition, (x, y))
        if not cells:
            raise ValueError("point outside the domain")
        return self.polys[cells[0]](x, y)

    def coefficient_vector(self) -> tuple:
        out = []
        for poly in self.polys:
            out.extend(poly.to_vector(self.d))
        return tuple(out)

    def __add__(self, other: "Spline") -> "Spline":
        return Spline(self.partition, self.d, self.mu,
                      tuple(a + b for a, b in zip(self.polys, other.polys)))

    def scale(self, c) -> "Spline":
        return Spline(self.partition, self.d, self.mu, tuple(p * c for p in self.polys))

    def is_global_polynomial(self) -> bool:
        return all(poly == self.polys[0] for poly in self.polys)


def combine(splines: Sequence[Spline], coeffs: Sequence) -> Spline:
    first = splines[0]
    polys = [BivariatePoly() for _ in first.polys]
    for s, c in zip(splines, coeffs):
        if c:
            polys = [a + b * c for a, b in zip(polys, s.polys)]
    return Spline(first.partition, first.d, first.mu, tuple(p.with_bound(first.d) for p in polys))


@dataclass(eq=False)
class SplineBasis:
    functions: list
    labels: list
    provenance: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.functions)

    def __iter__(self):
        return iter(self.functions)

    def __getitem__(self, i):
        return self.functions[i]

    @property
    def partition(self) -> Partition:
        return self.functions[0].partition

    def coefficient_matrix(self) -> RatMatrix:
        """Stacked per-cell coefficients, one column per function."""
        cols = [s.coefficient_vector() for s in self.functions]
        return RatMatrix.from_rows([list(r) for r in zip(*cols)], len(cols))

    def is_independent(self) -> bool:
        return rank(self.coefficient_matrix()) == len(self.functions)

    def represents(self, target: Spline):
        """Exact coefficients expressing target in this basis, or None."""
        from .exact import solve
        return solve(self.coefficient_matrix(), target.coefficient_vector())


def integrate_spline(system: CofactorSystem, vector: Sequence, source_cell: int = 0,
                     check: bool = True) -> Spline:
    """Per-cell polynomials from a conformality solution, by spanning-tree integration."""
    vector = tuple(Fraction(x) for x in vector)
    if len(vector) != system.n_unknowns:
        raise NotASolution("vector length does not match the system")
    if check and not system.is_solution(vector):
        raise NotASolution("vector violates the conformality conditions")
    p, d, mu = system.partition, system.d, system.mu
    polys = [None] * len(p.cells)
    polys[source_cell] = system.source_poly(vector)
    for t in dual_spanning_tree(p, source_cell):
        step = system.cofactor(vector, t.edge) * p.lines[t.edge].poly() ** (mu + 1)
        if p.positive_cell(t.edge) == t.child:
            polys[t.child] = polys[t.parent] + step
        else:
            polys[t.child] = polys[t.parent] - step
    return Spline(p, d, mu, tuple(q.with_bound(d) for q in polys))


def jump_mismatches(system: CofactorSystem, vector: Sequence, spline: Spline) -> list:
    """Interior edges where the integrated jump differs from q_e * L_e^(mu+1).

    Tree edges hold by construction, so any entry flags a non-tree adjacency
    whose two integration paths disagree.
    """
    p = system.partition
    vector = tuple(Fraction(x) for x in vector)
    bad = []
    for e in p.interior_edges:
        expected = system.cofactor(vector, e) * p.lines[e].poly() ** (system.mu + 1)
        if spline.jump(e) != expected:
            bad.append(e)
    return bad


def conformality_basis(p: Partition, d: int, mu: int, source_cell: int = 0) -> SplineBasis:
    """Basis from the raw nullspace of the conformality system (implicit route)."""
    system = assemble_conformality(p, d, mu)
    funcs, labels = [], []
    vectors = nullspace_basis(system.matrix)
    for j, v in enumerate(vectors):
        funcs.append(integrate_spline(system, v, source_cell, check=False))
        labels.append(("nullspace", j))
    return SplineBasis(funcs, labels, {"route": "conformality-nullspace", "d": d, "mu": mu,
                                       "source_cell": source_cell, "vectors": vectors})


# quasi-cross-cut construction --------------------------------------------

def half_lines(p: Partition, v: int) -> list:
    """For each distinct line through interior vertex v, the edges from v to the boundary.

    Uses the part of the maximal segment on the side whose endpoint lies on the
    boundary (the far end when both do).  Returns (line, edges) pairs, or
    raises NotQuasiCrossCut when some line through v reaches the boundary on
    neither side.
    """
    out = []
    for line in p.lines_through(v):
        seg = next(s for s in p.maximal_segments if s.line == line and v in s.vertices)
        k = seg.vertices.index(v)
        if k < len(seg.vertices) - 1 and seg.vertices[-1] in p.boundary_vertices:
            out.append((line, seg.edges[k:]))
        elif k > 0 and seg.vertices[0] in p.boundary_vertices:
            out.append((line, tuple(reversed(seg.edges[:k]))))
        else:
            raise NotQuasiCrossCut(f"line {line} through vertex {v} does not reach the boundary")
    return out


def vertex_relations(p: Partition, v: int, d: int, mu: int):
    """Solutions of sum_j eps_j q_j L_j^(mu+1) = 0 over the half-lines at v."""
    hl = half_lines(p, v)
    nq = dim_poly(d - mu - 1)
    cols = []
    for line, edges in hl:
        sign = p.crossing_sign(edges[0], v)
        cols.extend([sign * c for c in vec] for vec in _power_products(line, d, mu))
    if not cols:
        return hl, []
    m = RatMatrix.from_rows([list(r) for r in zip(*cols)], len(cols))
    return hl, [[vec[j * nq:(j + 1) * nq] for j in range(len(hl))] for vec in nullspace_basis(m)]


def local_vertex_dof(p: Partition, v: int, d: int, mu: int) -> int:
    """Local conformality freedom at v minus the straight-through line solutions."""
    nq = dim_poly(d - mu - 1)
    es = [e for e in p.vertex_edges[v] if not p.is_boundary_edge(e)]
    if not nq or not es:
        return 0
    cols = []
    for e in es:
        sign = p.crossing_sign(e, v)
        cols.extend([sign * c for c in vec] for vec in _power_products(p.lines[e], d, mu))
    m = RatMatrix.from_rows([list(r) for r in zip(*cols)], len(cols))
    through = len(es) - len({p.lines[e] for e in es})
    return len(cols) - rank(m) - through * nq


def qcc_basis(ep, d: int, mu: int, source_cell: int = 0) -> SplineBasis:
    """Explicit basis over a quasi-cross-cut partition.

    Members: the monomials of degree <= d, then for each cross-cut and each
    cofactor monomial the truncated power along the whole cut, then for each
    interior vertex the independent relations among its half-line truncated
    powers.  Accepts a Partition or an ExtendedPartition.
    """
    p = getattr(ep, "extended", ep)
    check_degree(d, mu)
    classes, kind = classify_segments(p)
    if kind is PartitionClass.GENERAL:
        raise NotQuasiCrossCut("partition has interior maximal segments")
    system = assemble_conformality(p, d, mu)
    n0, nq = system.n_source, system.n_cofactor
    n = system.n_unknowns
    vectors, labels = [], []
    for j, (a, b) in enumerate(monomials(d)):
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        vectors.append(v)
        labels.append(("monomial", a, b))
    if nq:
        for si, (seg, cls) in enumerate(zip(p.maximal_segments, classes)):
            if cls is not SegmentClass.CROSS_CUT:
                continue
            for j, (a, b) in enumerate(monomials(d - mu - 1)):
                v = [Fraction(0)] * n
                for e in seg.edges:
                    v[system.edge_offset[e] + j] = Fraction(1)
                vectors.append(v)
                labels.append(("cross-cut", si, a, b))
        for vert in p.interior_vertices:
            hl, sols = vertex_relations(p, vert, d, mu)
            for k, sol in enumerate(sols):
                v = [Fraction(0)] * n
                for (line, edges), q in zip(hl, sol):
                    for e in edges:
                        off = system.edge_offset[e]
                        for j, c in enumerate(q):
                            v[off + j] = c
                vectors.append(v)
                labels.append(("vertex", vert, k))
    funcs = [integrate_spline(system, v, source_cell) for v in vectors]
    return SplineBasis(funcs, labels, {"route": "qcc-truncated-power", "d": d, "mu": mu,
                                       "source_cell": source_cell, "vectors": vectors})
