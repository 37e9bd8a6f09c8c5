"""Spectral extremal bounds for book-free and K_{s,t}-free graphs.

Signless Laplacian and adjacency spectral radii by certified power iteration,
forbidden-subgraph profiles, closed-form bounds, exhaustive audits over small
graphs and a hill-climbing extremal search.
"""

from .audit import (
    ALL_FORMULAS,
    MUST_HOLD,
    AuditConfig,
    AuditRecord,
    AuditReport,
    audit_corpus,
    audit_exhaustive,
    audit_graph,
    audit_graphs,
    audit_up_to,
    friendship_extremality,
)
from .bounds import FORMULAS, HypothesisError, evaluate
from .forbidden import ForbiddenProfile, SrgParams, is_book_free, is_c4_free, is_kst_free, profile, srg_params
from .graph import FAMILY_NAMES, Graph, make_family
from .graph6 import Graph6Error, from_graph6, to_graph6
from .search import NoFeasibleStart, SearchConfig, SearchResult, extremal_search
from .spectra import SpectralEstimate, adj_radius, dense_eigen_oracle, jacobi_eigenvalues, q_radius

__version__ = "0.1.0"
