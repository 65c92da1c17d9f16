"""Exact linear algebra for the linear section cutting out the Lagrangian-Grassmannian."""

__version__ = "0.1.0"

from .combinatorics import (  # noqa: F401
    DualPairProfile,
    InvalidArgument,
    dual_pair_profile,
    enumerate_indices,
    partition_census,
    partition_class,
    rank_index,
    unrank_index,
)
from .linalg import SparseIntMatrix, rank, rank_char0, rank_mod_p  # noqa: F401
from .plucker import (  # noqa: F401
    PLAIN,
    SIGNED,
    PluckerRelation,
    Tensor,
    build_matrix,
    build_relation,
    contract_basis,
    contract_tensor,
    form_eval,
)
from .blocks import BlockDecomposition, blockwise_rank, decompose, match_template  # noqa: F401
