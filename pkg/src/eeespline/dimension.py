"""Closed-form dimension counts for cross-cut and quasi-cross-cut partitions."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .conformality import check_degree, dimension_oracle
from .errors import NotCrossCut, NotQuasiCrossCut
from .partition import Partition, PartitionClass, SegmentClass, classify_segments


def k_d_mu(d: int, mu: int, n: int) -> int:
    """Independent relations among n distinct lines meeting at one point."""
    check_degree(d, mu)
    return sum(max(0, n * (d - mu - j + 1) - (d - j + 2)) for j in range(1, d - mu + 1))


def _count(p: Partition, d: int, mu: int, classes) -> int:
    check_degree(d, mu)
    n_cut = sum(c is SegmentClass.CROSS_CUT for c in classes)
    total = comb(d + 2, 2) + n_cut * comb(d - mu + 1, 2)
    for v in p.interior_vertices:
        total += k_d_mu(d, mu, len(p.lines_through(v)))
    return total


def dim_cross_cut(p: Partition, d: int, mu: int) -> int:
    classes, kind = classify_segments(p)
    if kind is not PartitionClass.CROSS_CUT:
        raise NotCrossCut("partition is not a cross-cut partition")
    return _count(p, d, mu, classes)


def dim_quasi_cross_cut(p: Partition, d: int, mu: int) -> int:
    classes, kind = classify_segments(p)
    if kind is PartitionClass.GENERAL:
        raise NotQuasiCrossCut("partition has interior maximal segments")
    return _count(p, d, mu, classes)


@dataclass(frozen=True)
class DimReport:
    d: int
    mu: int
    kind: PartitionClass
    formula: int | None
    oracle: int
    eee: int | None = None

    @property
    def agree(self) -> bool:
        vals = [v for v in (self.formula, self.oracle, self.eee) if v is not None]
        return len(set(vals)) <= 1


def dimension_report(p: Partition, d: int, mu: int, with_eee: bool = False) -> DimReport:
    _, kind = classify_segments(p)
    formula = None if kind is PartitionClass.GENERAL else dim_quasi_cross_cut(p, d, mu)
    eee = None
    if with_eee:
        from .eee import dimension_via_eee
        eee = dimension_via_eee(p, d, mu)
    return DimReport(d, mu, kind, formula, dimension_oracle(p, d, mu), eee)
