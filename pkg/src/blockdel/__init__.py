"""Block Graph Deletion: kernelization, an exact FPT solver and a brute-force oracle."""
from .exceptions import InputError, InternalError
from .graph import BlockDecomposition, Graph, block_decomposition, build_graph, true_twin_classes
from .obstruction import Diamond, Hole, find_obstruction, is_block_graph
from .gallai import Cover, DisjointObstructions, FlowerAt, Hitter, Packing, apath_dichotomy, probe_vertex
from .expansion import ExpansionResult, expand
from .kernel import Answer, Instance, Reduced, ReductionEvent, kernelize, replay, size_bound
from .solver import SearchStats, block_disjoint, solve
from .oracle import PlantedSpec, gen_gnp, gen_planted, min_deletion_bruteforce, verify

__all__ = [
    "InputError", "InternalError",
    "Graph", "BlockDecomposition", "build_graph", "block_decomposition", "true_twin_classes",
    "Diamond", "Hole", "find_obstruction", "is_block_graph",
    "Packing", "Cover", "DisjointObstructions", "FlowerAt", "Hitter", "apath_dichotomy", "probe_vertex",
    "ExpansionResult", "expand",
    "Instance", "ReductionEvent", "Reduced", "Answer", "kernelize", "replay", "size_bound",
    "SearchStats", "block_disjoint", "solve",
    "PlantedSpec", "gen_planted", "gen_gnp", "min_deletion_bruteforce", "verify",
]
