"""Exact computations with the symmetric group algebra as a superalgebra.

Modules: combinatorics (partitions, tableaux), exactlinalg (exact matrices and
echelon forms), specht (seminormal representations), supermod (simple
supermodules), liesuper (bracket closures, derived algebras, centers),
verify (theorem checks) and cli.
"""
from .combinatorics import Partition, classify, partitions, standard_tableaux
from .exactlinalg import ExactMatrix, Quad
from .liesuper import closure, derived, transposition_elements, transposition_sum
from .specht import intertwiner, seminormal_rep
from .supermod import branch, supermodule, supermodules
from .verify import run_all

__all__ = ["Partition", "classify", "partitions", "standard_tableaux", "ExactMatrix", "Quad",
           "closure", "derived", "transposition_elements", "transposition_sum", "intertwiner",
           "seminormal_rep", "branch", "supermodule", "supermodules", "run_all"]
__version__ = "0.1.0"
