"""Schröder permutrees: faces of permutreehedra, ordered partitions and their lattices."""

from .algebra import (
    EMPTY,
    F,
    P_star,
    by_definition,
    group_into_fibers,
    group_pairs_into_fibers,
    op_convolution,
    op_coproduct,
    op_product,
    op_shuffle,
    restrict_parts,
    restrict_values,
    schr_closure_check,
    schroder_fiber,
)
from .faces import Face, contraction_closure, face_lattice_report, face_of, refines, tight_vertices
from .insertion import (
    OrderedPartition,
    all_ordered_partitions,
    canonical_partition,
    decorated_partitions,
    fiber_by_levels,
    fibers,
    insert_partition,
    ordered_partition,
    p_star,
    parse_partition,
    rewriting_class,
    schroder_congruent,
    schroder_permutrees,
)
from .model import (
    SchroderPermutree,
    contract,
    from_edges,
    from_permutree,
    is_increasing_contraction,
    require_valid_schroder,
    single_block,
    to_permutree,
    validate_schroder,
)
from .order import (
    FinitePoset,
    class_extremes,
    coinv,
    facial_covers,
    facial_weak_leq,
    facial_weak_order,
    facial_weak_order_by_covers,
    has_schroder_pattern,
    is_interval,
    schr_refine,
    schroder_lattice,
    schroder_quotient,
)

__all__ = [name for name in dir() if not name.startswith("_")]
