"""Exact construction of bivariate spline bases by extension and edge elimination."""
__version__ = "0.1.0"

from ._kernels import BACKEND
from .conformality import (CofactorSystem, Spline, SplineBasis, assemble_conformality,
                           conformality_basis, dimension_oracle, integrate_spline, qcc_basis)
from .dimension import DimReport, dim_cross_cut, dim_quasi_cross_cut, dimension_report, k_d_mu
from .eee import (EEEMatrix, assemble_eee, assemble_eee_directional, dimension_via_eee,
                  run_pipeline, synthesize_basis)
from .errors import *  # noqa: F401,F403
from .exact import RatMatrix, nullspace_basis, rank, rref
from .extend import ExtendedPartition, extend, extend_to_crosscut, extend_to_qcc
from .partition import Partition, PartitionClass, SegmentClass, build_partition, classify_segments
from .poly import BivariatePoly, LineForm

