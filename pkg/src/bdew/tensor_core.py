"""Dense complex linear algebra substrate: Kronecker products, partial
transposition, Hermitian eigendecomposition, traces, and the ``.cmat``
text format.

All operators are plain ``numpy`` arrays of ``complex128`` in row-major
order.  Everything here is pure and reentrant; arrays are never mutated
in place.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence, Tuple

import numpy as np

# Structural equality (hermiticity, orthonormality, identities).
TOL_EQ = 1e-12
# Spectral accuracy (eigenpair residuals, closed-form eigenvalue checks).
TOL_SPEC = 1e-10


def as_matrix(m) -> np.ndarray:
    """Coerce to a 2-D complex array without copying when possible."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={a.ndim}")
    return a


def validate_dims(factors: Sequence[int]) -> Tuple[int, ...]:
    """Check a tensor-factor dimension profile: every factor >= 2, nondecreasing."""
    dims = tuple(int(d) for d in factors)
    if not dims:
        raise ValueError("empty dimension profile")
    if any(d < 2 for d in dims):
        raise ValueError(f"every factor dimension must be >= 2, got {dims}")
    if any(a > b for a, b in zip(dims, dims[1:])):
        raise ValueError(f"factor dimensions must be nondecreasing, got {dims}")
    return dims


def kron(a, b) -> np.ndarray:
    """Kronecker product of two matrices."""
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(mats: Iterable[np.ndarray]) -> np.ndarray:
    out = None
    for m in mats:
        out = as_matrix(m) if out is None else np.kron(out, as_matrix(m))
    if out is None:
        raise ValueError("kron_all of empty sequence")
    return out


def partial_transpose(m, dims: Sequence[int], factor_index: int) -> np.ndarray:
    """Transpose applied to one tensor factor of a square operator.

    ``dims`` lists the local dimensions; the operator must act on the full
    tensor product space.  The operation is an involution on each factor
    and preserves the trace.
    """
    a = as_matrix(m)
    dims = tuple(int(d) for d in dims)
    total = math.prod(dims)
    if a.shape != (total, total):
        raise ValueError(f"matrix shape {a.shape} incompatible with dims {dims}")
    n = len(dims)
    if not 0 <= factor_index < n:
        raise ValueError(f"factor_index {factor_index} out of range for {n} factors")
    t = a.reshape(dims + dims)
    axes = list(range(2 * n))
    axes[factor_index], axes[n + factor_index] = axes[n + factor_index], axes[factor_index]
    return np.ascontiguousarray(t.transpose(axes).reshape(total, total))


def is_hermitian(m, tol: float = TOL_EQ) -> bool:
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        return False
    return float(np.max(np.abs(a - a.conj().T))) <= tol


def eig_hermitian(m, tol: float = TOL_EQ):
    """Eigenvalues (ascending, real) and orthonormal eigenvector columns.

    Raises ``ValueError`` on non-Hermitian input; the input is symmetrized
    before factorization so roundoff in the caller cannot leak into the
    spectrum.
    """
    a = as_matrix(m)
    if not is_hermitian(a, tol):
        raise ValueError("matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh(0.5 * (a + a.conj().T))
    return w, v


def min_eig(m, tol: float = TOL_EQ) -> float:
    return float(eig_hermitian(m, tol)[0][0])


def trace_product(a, b) -> complex:
    """Tr(A B) without forming the product matrix."""
    x, y = as_matrix(a), as_matrix(b)
    if x.shape[1] != y.shape[0] or x.shape[0] != y.shape[1]:
        raise ValueError(f"incompatible shapes for trace product: {x.shape}, {y.shape}")
    return complex(np.sum(x * y.T))


def dag(m) -> np.ndarray:
    return as_matrix(m).conj().T


def outer(v, w=None) -> np.ndarray:
    """|v><w| for 1-D state vectors (|v><v| when w is omitted)."""
    v = np.asarray(v, dtype=complex).ravel()
    w = v if w is None else np.asarray(w, dtype=complex).ravel()
    return np.outer(v, w.conj())


# ---------------------------------------------------------------------------
# .cmat text format: first line "rows cols", then rows*cols lines "re im"
# in row-major order.  17 significant digits give an exact float round-trip.
# ---------------------------------------------------------------------------

def format_cmat(m) -> str:
    a = as_matrix(m)
    rows, cols = a.shape
    lines = [f"{rows} {cols}"]
    for entry in a.ravel(order="C"):
        lines.append(f"{entry.real:.17g} {entry.imag:.17g}")
    return "\n".join(lines) + "\n"


def save_cmat(path, m) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_cmat(m))


def parse_cmat(text: str) -> np.ndarray:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty .cmat data")
    try:
        rows, cols = (int(tok) for tok in lines[0].split())
    except Exception as exc:
        raise ValueError(f"bad .cmat header {lines[0]!r}") from exc
    if len(lines) != 1 + rows * cols:
        raise ValueError(f"expected {rows * cols} entries, found {len(lines) - 1}")
    data = np.empty(rows * cols, dtype=complex)
    for k, ln in enumerate(lines[1:]):
        re_s, im_s = ln.split()
        data[k] = complex(float(re_s), float(im_s))
    return data.reshape(rows, cols)


def load_cmat(path) -> np.ndarray:
    with open(path, "r", encoding="ascii") as fh:
        return parse_cmat(fh.read())
