"""Python access to the asg arithmetical semigroup library."""

from ._asg import (
    Backend,
    alladi_partial_sums,
    b_transform_fuzz,
    density_estimate,
    duality_fuzz,
    named_graphs,
    partial_sum_statistics,
)

__all__ = [
    "Backend",
    "alladi_partial_sums",
    "b_transform_fuzz",
    "density_estimate",
    "duality_fuzz",
    "named_graphs",
    "partial_sum_statistics",
]
