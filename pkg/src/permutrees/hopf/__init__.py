"""Decorated shuffle algebra, the permutree Hopf algebra and integer point transforms."""

from .algebra import (
    EMPTY_TREE,
    E,
    H,
    P,
    P_in_F,
    basis_change,
    fiber,
    forest,
    from_F,
    indecomposable_generators,
    is_decomposable,
    lower_sets,
    over,
    p_coproduct,
    p_coproduct_sum,
    p_dendriform,
    p_multiply,
    p_multiply_all,
    p_product,
    q_coproduct,
    q_product,
    restrict_tree,
    to_F,
    tree_name,
    under,
)
from .formal import FormalSum
from .fqsym import (
    DecPerm,
    F,
    convolution,
    dec,
    dendriform,
    fq_coproduct,
    fq_product,
    shifted_concat,
    shifted_shuffle,
    tensor_product,
)
from .ipt import TruncatedSeries, chain_transform, cone_rays, ipt, ipt_by_extensions, ipt_closed, rational_term

__all__ = [name for name in dir() if not name.startswith("_")]
