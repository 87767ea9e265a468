"""
qspectra - signless Laplacian spectral toolkit.

Computes the signless Laplacian Estrada index (SLEE) by independent routes and
checks the extremal results for tricyclic graphs by exhaustive search.
"""

__version__ = "1.0.0"
