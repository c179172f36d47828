"""Energized sets of sets: connection matrices and their exact identities."""
from .energize import (
    ConnectionBundle,
    EnergyAssignment,
    build_bundle,
    constant_energy,
    energy_of,
    explicit_energy,
    omega_energy,
    parametric_energy,
    spin_energy,
)
from . import calculus, graphs, param, spectra
from .exact import ExactMatrix, Poly
from .report import Report
from .setsys import (
    SetSystem,
    boolean_dual,
    canonical_order,
    complete_complex,
    cycle_complex,
    decorated_path,
    downward_closure,
    grid_whitney,
    random_family,
    random_sets,
)

__all__ = [
    "ConnectionBundle",
    "EnergyAssignment",
    "ExactMatrix",
    "Poly",
    "Report",
    "SetSystem",
    "boolean_dual",
    "build_bundle",
    "calculus",
    "canonical_order",
    "complete_complex",
    "constant_energy",
    "cycle_complex",
    "decorated_path",
    "downward_closure",
    "energy_of",
    "explicit_energy",
    "graphs",
    "grid_whitney",
    "omega_energy",
    "param",
    "parametric_energy",
    "random_family",
    "random_sets",
    "spectra",
    "spin_energy",
]

__version__ = "0.1.0"
