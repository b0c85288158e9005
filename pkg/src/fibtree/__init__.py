"""Exact integer toolkit for labeled Fibonacci trees.

Labeled trees on the generation scheme u -> uv, v -> u, identified with
pairs (a, b) and with elements a + b*phi of Z[phi].  The package covers
the Wythoff pair sequences on Z, Fibonacci words, closed-form level
labelings, the tree group, sequence-representation search, the subtree
partial order, and the Wythoff array -- all in arbitrary-precision
integer arithmetic, with no floating point anywhere in the core.
"""

from .goldring import Atom, GoldInt, MapWord, apply_map, fib, fixed_point, gold_sign, phi_pow
from .wythoff import FibSeq, WythoffPair, primitive_rank, reference_index, u, u_inverse, v
from .fibword import Word, letter_at, parent_position, u_count, v_count, word
from .tree import (
    FibTree,
    LevelLabeling,
    NodeRef,
    branch_sequence,
    build_level_by_rules,
    build_levels,
    children_labels,
    level_interval,
    node_label,
    parent_label,
)
from .algebra import decompose, scalar_mul, tree_sum
from .represent import (
    Occurrence,
    TreeClass,
    classify,
    count_occurrences,
    find_interval_level,
    find_sequence,
    verify_lemma_shift,
)
from .order import SubtreeWitness, is_subtree, least_upper_bound, self_containment, subtree_at
from .warray import WythoffArray, hofstadter_g, hofstadter_levels, primitive_pairs_in_tree, wythoff_array

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "FibSeq",
    "FibTree",
    "GoldInt",
    "LevelLabeling",
    "MapWord",
    "NodeRef",
    "Occurrence",
    "SubtreeWitness",
    "TreeClass",
    "Word",
    "WythoffArray",
    "WythoffPair",
    "apply_map",
    "branch_sequence",
    "build_level_by_rules",
    "build_levels",
    "children_labels",
    "classify",
    "count_occurrences",
    "decompose",
    "fib",
    "find_interval_level",
    "find_sequence",
    "fixed_point",
    "gold_sign",
    "hofstadter_g",
    "hofstadter_levels",
    "is_subtree",
    "least_upper_bound",
    "letter_at",
    "level_interval",
    "node_label",
    "parent_label",
    "parent_position",
    "phi_pow",
    "primitive_pairs_in_tree",
    "primitive_rank",
    "reference_index",
    "scalar_mul",
    "self_containment",
    "subtree_at",
    "tree_sum",
    "u",
    "u_count",
    "u_inverse",
    "v",
    "v_count",
    "verify_lemma_shift",
    "word",
    "wythoff_array",
]
