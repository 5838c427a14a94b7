"""papkit: exact enumeration, bijections and generating functions for parity
alternating permutations (PAPs) and parity alternating derangements (PADs).
"""

__version__ = "0.1.0"

from .errors import PapkitError
from .perm import (
    CycleDecomposition,
    Parity,
    Permutation,
    parse_cycles,
    parse_permutation,
    parse_word,
)
from .split import SplitPair, join_pap, split_pap, split_pad
from .derangements import (
    DerangementReduction,
    ReductionKind,
    attach_largest,
    chain_derangement,
    detach_largest,
    exceptional_derangements,
    expand_derangement,
    extraction_involution,
    extraction_point,
    reduce_derangement,
)
from .padmaps import (
    PadReduction,
    exceptional_pads,
    pad_expand,
    pad_extraction_involution,
    pad_reduce,
    pad_step_down,
    pad_step_up,
    pap_grow,
    pap_grow_parity,
    pap_shrink,
    pap_shrink_parity,
    parity_swap,
)
from .sequences import (
    Family,
    Triangle,
    derangement_count,
    derangement_parity_counts,
    enumerate_family,
    excedance_triangle,
    family_count,
    pad_count,
    pad_excedance_by_convolution,
    pad_parity_counts,
    pad_parity_difference,
    pap_count,
    pap_parity_counts,
    signed_pad_excedance_diff,
)
from .series import Series, UPolySeries
from .egf import (
    bivariate_diff_egf,
    fdiff_egf,
    pap_egf,
    pap_parity_egfs,
    reference_egfs,
)
from .verify import VerificationReport, run_scope

__all__ = [
    "PapkitError",
    "CycleDecomposition",
    "Parity",
    "Permutation",
    "parse_cycles",
    "parse_permutation",
    "parse_word",
    "SplitPair",
    "join_pap",
    "split_pap",
    "split_pad",
    "DerangementReduction",
    "ReductionKind",
    "attach_largest",
    "chain_derangement",
    "detach_largest",
    "exceptional_derangements",
    "expand_derangement",
    "extraction_involution",
    "extraction_point",
    "reduce_derangement",
    "PadReduction",
    "exceptional_pads",
    "pad_expand",
    "pad_extraction_involution",
    "pad_reduce",
    "pad_step_down",
    "pad_step_up",
    "pap_grow",
    "pap_grow_parity",
    "pap_shrink",
    "pap_shrink_parity",
    "parity_swap",
    "Family",
    "Triangle",
    "derangement_count",
    "derangement_parity_counts",
    "enumerate_family",
    "excedance_triangle",
    "family_count",
    "pad_count",
    "pad_excedance_by_convolution",
    "pad_parity_counts",
    "pad_parity_difference",
    "pap_count",
    "pap_parity_counts",
    "signed_pad_excedance_diff",
    "Series",
    "UPolySeries",
    "bivariate_diff_egf",
    "fdiff_egf",
    "pap_egf",
    "pap_parity_egfs",
    "reference_egfs",
    "VerificationReport",
    "run_scope",
]
