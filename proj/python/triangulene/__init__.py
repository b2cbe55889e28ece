"""Exact spectra and eigenstates of zig-zag triangular graphene billiards."""

from triangulene._core import (
    Lattice,
    a_sublattice_vanishing_check,
    alpha,
    analytic_energies,
    analytic_spectrum,
    build_hamiltonian,
    build_periodic_state,
    chain_reference,
    completeness_residual,
    dispersion,
    edge_basis,
    embedding_residual,
    full_basis,
    index_set,
    layer_count,
    numerical_spectrum,
    quantized_k,
    rotation_center,
    star,
    verify,
    verify_diophantine,
)

__all__ = [
    "Lattice",
    "a_sublattice_vanishing_check",
    "alpha",
    "analytic_energies",
    "analytic_spectrum",
    "build_hamiltonian",
    "build_periodic_state",
    "chain_reference",
    "completeness_residual",
    "dispersion",
    "edge_basis",
    "embedding_residual",
    "full_basis",
    "index_set",
    "layer_count",
    "numerical_spectrum",
    "quantized_k",
    "rotation_center",
    "star",
    "verify",
    "verify_diophantine",
]

__version__ = "0.1.0"
