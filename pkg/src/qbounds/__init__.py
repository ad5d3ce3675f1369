"""Signless Laplacian spectra, Zagreb-index bounds and eigenvalue-sum conjecture checks."""

from qbounds.graph import FamilySpec, Graph, Graph6Error, from_graph6, generate, to_graph6
from qbounds.spectra import ConvergenceError, Spectrum, eigenvalues, spectrum
from qbounds.bounds import BoundReport, ConjectureReport, conjecture_check, evaluate_all

__all__ = [
    "BoundReport",
    "ConjectureReport",
    "ConvergenceError",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "Spectrum",
    "conjecture_check",
    "eigenvalues",
    "evaluate_all",
    "from_graph6",
    "generate",
    "spectrum",
    "to_graph6",
]
