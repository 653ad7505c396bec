"""Euclidean minimum function on the Gaussian integers.

Gaussian integers are passed and returned as ``(re, im)`` tuples.
"""

from ._core import (
    CapExceeded,
    b_size,
    build_levels,
    canonical_residue,
    check_weight_identities,
    coset_domain,
    decompose,
    enumerate_region,
    evaluate,
    expand,
    in_region,
    least_level,
    phi,
    preimage,
    preimage_size,
    s_size,
    surjects,
    table,
    table_csv,
    w,
)

__all__ = [
    "CapExceeded",
    "b_size",
    "build_levels",
    "canonical_residue",
    "check_weight_identities",
    "coset_domain",
    "decompose",
    "enumerate_region",
    "evaluate",
    "expand",
    "in_region",
    "least_level",
    "phi",
    "preimage",
    "preimage_size",
    "s_size",
    "surjects",
    "table",
    "table_csv",
    "w",
]
__version__ = "0.1.0"
