"""Sombor index and Sombor energy of m-splitting and m-shadow graphs of
regular graphs, plus a harness that checks closed forms against direct
computation."""

from .claims import builtin_claims, check_claim, evaluate_formula, run_suite
from .constructors import GraphSpec, ShadowConvention, generate, m_shadow, m_splitting, parse_spec
from .graph import Graph, degree, edges, is_k_regular, new_graph
from .invariants import (
    DenseSymMatrix,
    Spectrum,
    adjacency_matrix,
    energy,
    kronecker,
    rank2_spectrum,
    reduced_matrix,
    sombor_index,
    sombor_matrix,
    symmetric_eigenvalues,
)

__version__ = "0.1.0"
