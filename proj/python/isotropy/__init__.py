"""Isotropic subspaces of generic forms with Schur-functor symmetry.

Big integers come back as Python ints; partitions are tuples of parts.
"""

from ._core import (
    IsotropyError,
    count_ssyt,
    cross_validate,
    decide,
    dim,
    hook_content,
    horizontal_strip_predecessors,
    parse_partition,
    proof_chain,
    recurrence,
    schur_expand_product,
    tevelev_inequalities,
    threshold_n,
    top_chern_nonzero,
    weight_vectors,
)

__all__ = [
    "IsotropyError",
    "count_ssyt",
    "cross_validate",
    "decide",
    "dim",
    "hook_content",
    "horizontal_strip_predecessors",
    "parse_partition",
    "proof_chain",
    "recurrence",
    "schur_expand_product",
    "tevelev_inequalities",
    "threshold_n",
    "top_chern_nonzero",
    "weight_vectors",
]
