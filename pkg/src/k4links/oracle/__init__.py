"""Brute-force enumeration of small diagrams and labelled trees.

Nothing here depends on the grammar or series modules, so the counts it
produces are an independent check on them.
"""

from .factor import FactorizationError, TorusFactorization, count_components, factorize, is_minimal, is_unknot
from .graphs import has_k4_minor_bruteforce, is_k4_minor_free, reduces_to_nothing
from .rotation import RotationMap, canonical_form, count_rooted_maps, enumerate_rooted_maps
from .trees import canonical_code, edge_labels, enumerate_pointed_T_trees, enumerate_T_trees, knot_labels
from .counts import DiagramCounts, automorphism_fraction, diagram_counts

__all__ = [
    "RotationMap", "canonical_form", "enumerate_rooted_maps", "count_rooted_maps",
    "is_k4_minor_free", "reduces_to_nothing", "has_k4_minor_bruteforce",
    "TorusFactorization", "FactorizationError", "factorize", "is_minimal", "is_unknot",
    "count_components", "enumerate_T_trees", "enumerate_pointed_T_trees", "knot_labels", "edge_labels", "canonical_code",
    "DiagramCounts", "diagram_counts", "automorphism_fraction",
]
