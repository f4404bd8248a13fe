"""Proof-guided finders and the g(m, i) bound calculus."""

from .gseq import extreme_index, f_upper_bound, g, g_extreme, g_extreme_closed_form_x4, tree_bound
from .three_block import find_reversed_three_block, find_three_block_decomposition, target_pattern
from .origins import find_P1k1_via_origins
from .p1l1 import find_P1l1_at_least
from .p1k1 import find_P1k1
from .trace import ProofTrace, TraceStep

__all__ = [
    "ProofTrace",
    "TraceStep",
    "extreme_index",
    "f_upper_bound",
    "find_P1k1",
    "find_P1k1_via_origins",
    "find_P1l1_at_least",
    "find_reversed_three_block",
    "find_three_block_decomposition",
    "g",
    "g_extreme",
    "g_extreme_closed_form_x4",
    "target_pattern",
    "tree_bound",
]
