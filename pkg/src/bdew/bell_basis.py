"""Generalized Bell bases from phase and shift operators.

Three constructions are supported:

* ``GENERIC`` -- the first factor carries powers of the phase operator
  ``Omega = diag(1, w, ..., w^(d1-1))`` with ``w = exp(2*pi*i/d1)``; every
  other factor carries powers of its local cyclic shift ``S|j> = |j+1 mod d>``.
  The reference state is ``(1/sqrt(d1)) * sum_i |i, i, ..., i>``.
* ``QUBIT_PAULI`` -- all factors two-dimensional; identical to ``GENERIC``
  (the phase operator is sigma_z and the shift is sigma_x).
* ``TWO_BY_N`` -- dims ``(2, N)``; both operators act on the second factor:
  ``|psi_(i1,i2)> = (I_2 (x) S^i2 Omega_N^i1) |psi_00>`` with
  ``Omega_N = diag(1, -1, 1, ..., 1)`` and ``S`` the N-level cyclic shift.
  The two-level swap printed for this family is the N = 2 instance of the
  cyclic shift; the cyclic completion keeps the family orthonormal and
  complete for N > 2 (the bare swap repeats states once i2 >= 2).

All constructions yield ``prod(dims)`` orthonormal states resolving the
identity, indexed by tuples ``(i1, ..., in)`` with ``0 <= i_k < d_k``,
ordered lexicographically.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple

import numpy as np

from .tensor_core import TOL_EQ, outer, validate_dims

BellIndex = Tuple[int, ...]


class Convention(enum.Enum):
    GENERIC = "generic"
    QUBIT_PAULI = "qubit-pauli"
    TWO_BY_N = "two-by-n"


def phase_matrix(d: int, omega: complex | None = None) -> np.ndarray:
    """diag(1, w, w^2, ..., w^(d-1)); w defaults to exp(2*pi*i/d)."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    w = np.exp(2j * np.pi / d) if omega is None else omega
    return np.diag(w ** np.arange(d)).astype(complex)


def shift_matrix(d: int) -> np.ndarray:
    """Cyclic shift S|j> = |j+1 mod d>."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    s = np.zeros((d, d), dtype=complex)
    for j in range(d):
        s[(j + 1) % d, j] = 1.0
    return s


def two_by_n_phase(n: int) -> np.ndarray:
    """diag(1, -1, 1, ..., 1) on N levels."""
    if n < 2:
        raise ValueError("dimension must be >= 2")
    diag = np.ones(n, dtype=complex)
    diag[1] = -1.0
    return np.diag(diag)


def two_by_n_swap(n: int) -> np.ndarray:
    """Permutation of levels 0 and 1, identity on the rest."""
    if n < 2:
        raise ValueError("dimension must be >= 2")
    s = np.eye(n, dtype=complex)
    s[0, 0] = s[1, 1] = 0.0
    s[0, 1] = s[1, 0] = 1.0
    return s


def build_omega_shift(d: int, convention: Convention = Convention.GENERIC):
    """The phase/shift operator pair used by a convention, at local dimension d."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    if convention is Convention.TWO_BY_N:
        return two_by_n_phase(d), two_by_n_swap(d)
    return phase_matrix(d), shift_matrix(d)


@dataclass(frozen=True)
class BellBasis:
    """A complete orthonormal Bell family for a dimension profile."""

    dims: Tuple[int, ...]
    convention: Convention
    states: np.ndarray = field(repr=False)  # shape (num_states, total_dim)
    index_order: Tuple[BellIndex, ...] = field(repr=False)
    _lookup: Dict[BellIndex, int] = field(repr=False, default_factory=dict)

    @property
    def total_dim(self) -> int:
        return math.prod(self.dims)

    @property
    def num_states(self) -> int:
        return self.states.shape[0]

    def row(self, idx: BellIndex) -> int:
        try:
            return self._lookup[tuple(idx)]
        except KeyError:
            raise KeyError(f"unknown Bell index {tuple(idx)} for dims {self.dims}") from None

    def state(self, idx: BellIndex) -> np.ndarray:
        return self.states[self.row(idx)]

    def projector(self, idx: BellIndex) -> np.ndarray:
        return outer(self.state(idx))

    def gram(self) -> np.ndarray:
        return self.states.conj() @ self.states.T

    def completeness_sum(self) -> np.ndarray:
        return self.states.T @ self.states.conj()

    def mixture(self, weights: Dict[BellIndex, float] | np.ndarray) -> np.ndarray:
        """sum_idx w_idx |psi_idx><psi_idx| as a dense matrix."""
        if isinstance(weights, dict):
            vec = np.zeros(self.num_states)
            for idx, w in weights.items():
                vec[self.row(idx)] = float(w)
        else:
            vec = np.asarray(weights, dtype=float)
            if vec.shape != (self.num_states,):
                raise ValueError("weight vector length mismatch")
        return (self.states.T * vec) @ self.states.conj()


def bell_projector(basis: BellBasis, idx: BellIndex) -> np.ndarray:
    return basis.projector(idx)


def _reference_state(dims: Sequence[int]) -> np.ndarray:
    d1 = dims[0]
    total = math.prod(dims)
    psi = np.zeros(total, dtype=complex)
    strides = np.cumprod((list(dims[1:]) + [1])[::-1])[::-1]
    for i in range(d1):
        flat = int(sum(i * s for s in strides))
        psi[flat] = 1.0
    return psi / math.sqrt(d1)


def build_bell_basis(dims: Sequence[int], convention: Convention = Convention.GENERIC) -> BellBasis:
    dims = validate_dims(dims)
    if convention is Convention.QUBIT_PAULI and any(d != 2 for d in dims):
        raise ValueError(f"qubit convention requires all factors = 2, got {dims}")
    if convention is Convention.TWO_BY_N and (len(dims) != 2 or dims[0] != 2):
        raise ValueError(f"2xN convention requires dims = (2, N), got {dims}")

    psi0 = _reference_state(dims)
    index_order = tuple(itertools.product(*(range(d) for d in dims)))
    states = np.empty((len(index_order), math.prod(dims)), dtype=complex)

    if convention is Convention.TWO_BY_N:
        n = dims[1]
        omega, s = two_by_n_phase(n), shift_matrix(n)
        shift_pows = [np.linalg.matrix_power(s, k) for k in range(n)]
        for r, (i1, i2) in enumerate(index_order):
            op = np.kron(np.eye(2, dtype=complex), shift_pows[i2] @ (omega if i1 else np.eye(n)))
            states[r] = op @ psi0
    else:
        omega = phase_matrix(dims[0])
        omega_pows = [np.linalg.matrix_power(omega, k) for k in range(dims[0])]
        shift_pows = [
            [np.linalg.matrix_power(shift_matrix(d), k) for k in range(d)] for d in dims[1:]
        ]
        for r, idx in enumerate(index_order):
            op = omega_pows[idx[0]]
            for f, k in enumerate(idx[1:]):
                op = np.kron(op, shift_pows[f][k])
            states[r] = op @ psi0

    basis = BellBasis(
        dims=dims,
        convention=convention,
        states=states,
        index_order=index_order,
        _lookup={idx: r for r, idx in enumerate(index_order)},
    )
    _check_orthonormal_complete(basis)
    return basis


def _check_orthonormal_complete(basis: BellBasis, tol: float = 1e3 * TOL_EQ) -> None:
    g = basis.gram()
    if float(np.max(np.abs(g - np.eye(basis.num_states)))) > tol:
        raise AssertionError("Bell family is not orthonormal; construction bug")
    c = basis.completeness_sum()
    if float(np.max(np.abs(c - np.eye(basis.total_dim)))) > tol:
        raise AssertionError("Bell family does not resolve the identity; construction bug")
