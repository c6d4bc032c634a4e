from .shortest_paths import (
    UNREACHABLE,
    FuzzyGraph,
    ShortestPaths,
    classical_fw_oracle,
    floyd_warshall,
    path_cost,
    reconstruct_path,
)
from .sorting import insertion_sort

__all__ = [
    "UNREACHABLE",
    "FuzzyGraph",
    "ShortestPaths",
    "classical_fw_oracle",
    "floyd_warshall",
    "insertion_sort",
    "path_cost",
    "reconstruct_path",
]
