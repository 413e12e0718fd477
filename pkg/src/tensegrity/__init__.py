"""Tensegrity frameworks: combinatorial decomposition into atoms, self-stresses
and polynomial characterization of realizable placements."""

from .characterize import (CharacterizationResult, characterize_via_elimination, reconstruct,
                           verify_point)
from .core import Atom, DecompositionTrace, Extraction, Graph, Removal, replay
from .decompose import (SelectionPolicy, combinatorial_decompose, is_edge_inserting,
                        necessary_condition, search_edge_inserting)
from .framework import (Framework, Stress, atom_stress, atomic_decompose, classify,
                        is_equilibrium, self_stress_basis)

__all__ = [
    "Atom", "CharacterizationResult", "DecompositionTrace", "Extraction", "Framework", "Graph",
    "Removal", "SelectionPolicy", "Stress", "atom_stress", "atomic_decompose",
    "characterize_via_elimination", "classify", "combinatorial_decompose", "is_edge_inserting",
    "is_equilibrium", "necessary_condition", "reconstruct", "replay", "search_edge_inserting",
    "self_stress_basis", "verify_point",
]
