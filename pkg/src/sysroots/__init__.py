"""Exact verification of systems of roots, their catalogs and nilradical models."""

from .axioms import AxiomReport, verify_all
from .catalog import FAMILIES, CatalogEntry, build_family
from .euclidean import build_classical, cross_validate, to_rootset
from .linalg import Matrix, rank, vec
from .nilradical import build_nilradical, decompose_adjoint, rep_matrices, root_subalgebra
from .roots import (RootSet, compare_chain_sum, extremal_chain, killing_integer, killing_table,
                    load_rootset)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport", "CatalogEntry", "FAMILIES", "Matrix", "RootSet", "build_classical",
    "build_family", "build_nilradical", "compare_chain_sum", "cross_validate", "decompose_adjoint",
    "extremal_chain", "killing_integer", "killing_table", "load_rootset", "rank", "rep_matrices",
    "root_subalgebra", "to_rootset", "vec", "verify_all",
]
