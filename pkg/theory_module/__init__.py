"""
Theory Module

Relation checks, reconstruction invariants, the validation suite and the
search for graphs the filtered series separates.
"""

from .relations import check_pI, check_qI, check_tree_relations
from .invariants import degree_d, incident_edge_count, multiplicity, reconstruct
from .validation import run_checks
from .search import search

__all__ = [
    'check_pI', 'check_qI', 'check_tree_relations',
    'degree_d', 'incident_edge_count', 'multiplicity', 'reconstruct',
    'run_checks',
    'search',
]
