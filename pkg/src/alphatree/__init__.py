"""Alphabetic minimax trees over integer and real weights, a dynamic
level tree with exact undo, and order-preserving prefix-code tooling."""

from .core import (
    DepthProfileError,
    MinimaxTree,
    ParseError,
    alpha_int_fast,
    alpha_int_oracle,
    depths_to_tree,
    minimax_cost_by_dp,
    parse_weights,
    tree_cost,
)
from .leveltree import LevelTree, LevelTreeError, UnionFindDeunion, ceil_log2
from .realweight import (
    RealCostResult,
    WeightSeq,
    alpha_real,
    alpha_real_new,
    alpha_real_oracle,
    alpha_real_sorted,
    choose_strategy,
    select_kth,
    strategy_for,
)
from .coding import (
    CodeBook,
    CodeReport,
    CodingError,
    DecodeError,
    Distribution,
    UndefinedDivergenceError,
    build_code,
    codewords_from_depths,
    decode,
    empirical_distribution,
    encode,
    entropy,
    evaluate,
    redundancy_bound,
    relative_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "CodeBook",
    "CodeReport",
    "CodingError",
    "DecodeError",
    "DepthProfileError",
    "Distribution",
    "LevelTree",
    "LevelTreeError",
    "MinimaxTree",
    "ParseError",
    "RealCostResult",
    "UndefinedDivergenceError",
    "UnionFindDeunion",
    "WeightSeq",
    "alpha_int_fast",
    "alpha_int_oracle",
    "alpha_real",
    "alpha_real_new",
    "alpha_real_oracle",
    "alpha_real_sorted",
    "build_code",
    "ceil_log2",
    "choose_strategy",
    "codewords_from_depths",
    "decode",
    "depths_to_tree",
    "empirical_distribution",
    "encode",
    "entropy",
    "evaluate",
    "minimax_cost_by_dp",
    "parse_weights",
    "redundancy_bound",
    "relative_entropy",
    "select_kth",
    "strategy_for",
    "tree_cost",
]
