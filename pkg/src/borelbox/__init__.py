"""Boxed d-dimensional partitions, strongly stable monomial ideals, and the
side-preserving bijection onto totally symmetric partitions, with exact
enumeration and q-polynomial cross-checks."""

from .bijection import (
    FSet,
    bgens_via_psi,
    lambda_inv,
    lambda_map,
    omega,
    omega_inv,
    psi,
    psi_inv,
    ss_to_ts_partition,
    ts_to_ss_partition,
)
from .correspondence import ideal_to_partition, partition_to_ideal
from .enumeration import (
    CountTable,
    cell_gf_ss,
    count_ss,
    count_table,
    count_ts,
    enumerate_partitions,
    hawkes_check,
    orbit_gf_ts,
    qtspp,
    stembridge_t3,
)
from .errors import (
    BorelboxError,
    CellNotInPartition,
    ClosureViolation,
    DimensionMismatch,
    EmptyInput,
    InexactDivision,
    InputError,
    InvalidCell,
    InvalidFSet,
    InvalidMove,
    MissingPurePower,
    NonIntegerProduct,
    NotArtinian,
    NotStronglyStable,
    NotSymmetric,
    NotTotallySymmetric,
    NotWeaklyIncreasing,
    ResourceLimit,
    UnsupportedDimension,
)
from .ideals import (
    Monomial,
    MonomialIdeal,
    apply_borel_move,
    borel_closure,
    divides,
    minimalize,
    monomial_str,
    symmetrize,
)
from .partitions import Cell, Partition
from .qpoly import QPolynomial

__version__ = "0.1.0"

__all__ = [
    "BorelboxError",
    "Cell",
    "CellNotInPartition",
    "ClosureViolation",
    "CountTable",
    "DimensionMismatch",
    "EmptyInput",
    "FSet",
    "InexactDivision",
    "InputError",
    "InvalidCell",
    "InvalidFSet",
    "InvalidMove",
    "MissingPurePower",
    "Monomial",
    "MonomialIdeal",
    "NonIntegerProduct",
    "NotArtinian",
    "NotStronglyStable",
    "NotSymmetric",
    "NotTotallySymmetric",
    "NotWeaklyIncreasing",
    "Partition",
    "QPolynomial",
    "ResourceLimit",
    "UnsupportedDimension",
    "apply_borel_move",
    "bgens_via_psi",
    "borel_closure",
    "cell_gf_ss",
    "count_ss",
    "count_table",
    "count_ts",
    "divides",
    "enumerate_partitions",
    "hawkes_check",
    "ideal_to_partition",
    "lambda_inv",
    "lambda_map",
    "minimalize",
    "monomial_str",
    "omega",
    "omega_inv",
    "orbit_gf_ts",
    "partition_to_ideal",
    "psi",
    "psi_inv",
    "qtspp",
    "ss_to_ts_partition",
    "stembridge_t3",
    "symmetrize",
    "ts_to_ss_partition",
]
