"""Bell-diagonal entanglement witnesses.

A witness in this family has the form

    W = r * I/D + (1 - r) * sum_idx q_idx |psi_idx><psi_idx|,   r <= 0,

over a generalized Bell basis.  The package constructs the named
one-parameter families exactly (rational arithmetic), solves the
associated linear programs with an exact simplex, validates everything
against a brute-force product-state oracle, and carries out the
downstream analyses: partial-transpose spectra, decomposability bounds,
bound-entangled-state construction and detection, Choi-map witnesses,
and boundary separable states.
"""

from .bell_basis import BellBasis, Convention, build_bell_basis, build_omega_shift
from .product_states import distribution, c_gamma, oracle_min_c
from .tensor_core import (
    TOL_EQ,
    TOL_SPEC,
    eig_hermitian,
    kron,
    load_cmat,
    partial_transpose,
    save_cmat,
    trace_product,
)

__all__ = [
    "BellBasis",
    "Convention",
    "build_bell_basis",
    "build_omega_shift",
    "distribution",
    "c_gamma",
    "oracle_min_c",
    "kron",
    "partial_transpose",
    "eig_hermitian",
    "trace_product",
    "save_cmat",
    "load_cmat",
    "TOL_EQ",
    "TOL_SPEC",
]

__version__ = "0.1.0"
