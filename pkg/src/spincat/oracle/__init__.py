"""Independent ground truth: coherent-basis states, brute-force tree, adjudication."""
from .adjudicate import (
    AGREE,
    DEFAULT_GRID,
    DISAGREE,
    PAPER_DIFFERS,
    ComparisonReport,
    Grid,
    adjudicate,
    load_grid,
    write_ledger,
)
from .coherent import CoherentVec, factorized_overlap, from_coherent, gram, inner, to_coherent
from .tree import OracleResult, OracleStats, oracle_concurrence, oracle_tree

__all__ = [
    "AGREE",
    "DEFAULT_GRID",
    "DISAGREE",
    "PAPER_DIFFERS",
    "ComparisonReport",
    "Grid",
    "adjudicate",
    "load_grid",
    "write_ledger",
    "CoherentVec",
    "factorized_overlap",
    "from_coherent",
    "gram",
    "inner",
    "to_coherent",
    "OracleResult",
    "OracleStats",
    "oracle_concurrence",
    "oracle_tree",
]
