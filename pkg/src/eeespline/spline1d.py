"""Univariate splines: knot vectors, exact B-splines and knot removal by elimination."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .conformality import check_degree
from .errors import NotARefinement, OutOfDomain
from .exact import Q, RatMatrix, nullspace_basis
from .poly import UnivariatePoly


@dataclass(frozen=True, eq=False)
class KnotVector:
    """Open knot vector over sorted breakpoints.

    End breakpoints get multiplicity d + 1, interior ones d - mu.
    """
    breakpoints: tuple
    d: int
    mu: int

    def __post_init__(self):
        check_degree(self.d, self.mu)
        bp = tuple(Q(b) for b in self.breakpoints)
        if len(bp) < 2 or any(a >= b for a, b in zip(bp, bp[1:])):
            raise ValueError("breakpoints must be strictly increasing, at least two")
        object.__setattr__(self, "breakpoints", bp)

    @classmethod
    def of(cls, breakpoints: Sequence, d: int, mu: int) -> "KnotVector":
        return cls(tuple(breakpoints), d, mu)

    @property
    def interior(self) -> tuple:
        return self.breakpoints[1:-1]

    @property
    def multiplicities(self) -> tuple:
        n = len(self.breakpoints)
        return tuple(self.d + 1 if i in (0, n - 1) else self.d - self.mu for i in range(n))

    @cached_property
    def knots(self) -> tuple:
        out = []
        for b, m in zip(self.breakpoints, self.multiplicities):
            out.extend([b] * m)
        return tuple(out)

    @property
    def dimension(self) -> int:
        return (self.d + 1) + len(self.interior) * (self.d - self.mu)

    def __len__(self):
        return len(self.knots) - self.d - 1

    @cached_property
    def pieces(self) -> tuple:
        """pieces[s][i]: polynomial of B_i on span s (between consecutive breakpoints)."""
        t, d = self.knots, self.d
        n = len(self)
        out = []
        for s in range(len(self.breakpoints) - 1):
            lo = self.breakpoints[s]
            k = max(j for j in range(len(t) - 1) if t[j] <= lo < t[j + 1])
            # degree 0 on knot span k, raised by Cox-de Boor
            B = {k: UnivariatePoly.of([1])}
            for p in range(1, d + 1):
                nb = {}
                for i in range(k - p, k + 1):
                    acc = UnivariatePoly(())
                    if i in B and t[i + p] != t[i]:
                        w = 1 / (t[i + p] - t[i])
                        acc = acc + B[i] * UnivariatePoly.of([-t[i] * w, w])
                    if i + 1 in B and t[i + p + 1] != t[i + 1]:
                        w = 1 / (t[i + p + 1] - t[i + 1])
                        acc = acc + B[i + 1] * UnivariatePoly.of([t[i + p + 1] * w, -w])
                    nb[i] = acc
                B = nb
            out.append(tuple(B.get(i, UnivariatePoly(())) for i in range(n)))
        return tuple(out)

    def span(self, x, side: str = "right") -> int:
        x = Q(x)
        bp = self.breakpoints
        if x < bp[0] or x > bp[-1]:
            raise OutOfDomain(f"{x} outside [{bp[0]}, {bp[-1]}]")
        if side not in ("right", "left"):
            raise ValueError("side must be 'right' or 'left'")
        last = len(bp) - 2
        if side == "right":
            return min(last, max(s for s in range(last + 1) if bp[s] <= x))
        return max(0, min(s for s in range(last + 1) if x <= bp[s + 1]))


def bspline_eval(kv: KnotVector, index: int, x, r: int = 0, side: str = "right") -> Fraction:
    """r-th one-sided derivative of B_index at x."""
    if not 0 <= index < len(kv):
        raise IndexError(f"B-spline index {index} out of range")
    return kv.pieces[kv.span(x, side)][index].derivative(r)(x)


def eval_combination(kv: KnotVector, coeffs: Sequence, x, r: int = 0, side: str = "right") -> Fraction:
    piece = kv.pieces[kv.span(x, side)]
    return sum((Q(c) * b.derivative(r)(x) for c, b in zip(coeffs, piece)), Fraction(0))


def check_refinement(fine: KnotVector, coarse: KnotVector) -> None:
    if (fine.d, fine.mu) != (coarse.d, coarse.mu):
        raise NotARefinement("degree and smoothness must match")
    if fine.breakpoints[0] != coarse.breakpoints[0] or fine.breakpoints[-1] != coarse.breakpoints[-1]:
        raise NotARefinement("knot vectors cover different intervals")
    if not set(coarse.breakpoints) <= set(fine.breakpoints):
        raise NotARefinement("coarse breakpoints are not all fine breakpoints")


def removed_knots(fine: KnotVector, coarse: KnotVector) -> tuple:
    keep = set(coarse.breakpoints)
    return tuple(b for b in fine.breakpoints if b not in keep)


def eee_1d(fine: KnotVector, coarse: KnotVector) -> RatMatrix:
    """Derivative jumps of orders mu+1..d of each fine B-spline at every removed knot."""
    check_refinement(fine, coarse)
    rows = []
    for x in removed_knots(fine, coarse):
        for r in range(fine.mu + 1, fine.d + 1):
            rows.append([bspline_eval(fine, i, x, r, "right") - bspline_eval(fine, i, x, r, "left")
                         for i in range(len(fine))])
    return RatMatrix.from_rows(rows, len(fine))


def coarse_basis_1d(fine: KnotVector, coarse: KnotVector) -> list:
    """Fine-basis coefficient vectors spanning the coarse spline space."""
    return nullspace_basis(eee_1d(fine, coarse))


def insertion_matrix(coarse: KnotVector, fine: KnotVector) -> RatMatrix:
    """A with B_coarse = B_fine A, built by repeated single-knot insertion."""
    check_refinement(fine, coarse)
    d = coarse.d
    t = list(coarse.knots)
    A = [[Fraction(int(i == j)) for j in range(len(coarse))] for i in range(len(coarse))]
    for z in removed_knots(fine, coarse):
        for _ in range(d - coarse.mu):
            k = max(j for j in range(len(t) - 1) if t[j] <= z < t[j + 1])
            n = len(t) - d - 1
            step = [[Fraction(0)] * n for _ in range(n + 1)]
            for i in range(n + 1):
                if i <= k - d:
                    alpha = Fraction(1)
                elif i >= k + 1:
                    alpha = Fraction(0)
                else:
                    alpha = (z - t[i]) / (t[i + d] - t[i])
                if i < n:
                    step[i][i] = alpha
                if i >= 1:
                    step[i][i - 1] = 1 - alpha
            A = [[sum((step[i][m] * A[m][j] for m in range(n)), Fraction(0)) for j in range(len(coarse))]
                 for i in range(n + 1)]
            t.insert(k + 1, z)
    return RatMatrix.from_rows(A, len(coarse))
