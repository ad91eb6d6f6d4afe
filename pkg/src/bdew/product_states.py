"""Product states, their Bell-overlap distributions, and a numerical
oracle minimizing the weighted distribution sum over all product states.

For a product state ``|gamma> = |a_1>...|a_n>`` the distribution is
``P_idx = |<gamma|psi_idx>|^2``.  It sums to one (completeness) and each
entry is bounded by ``1/d_1``.  The oracle minimizes
``C(gamma) = sum_idx q_idx P_idx`` by alternating exact single-factor
ground-state updates (for fixed other factors the objective is a
Hermitian quadratic form in one factor) from a deterministic seeded set
of starting points, followed by a coordinate-descent polish on angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .bell_basis import BellBasis, BellIndex, Convention, build_bell_basis
from .tensor_core import TOL_EQ

ProductState = List[np.ndarray]  # one unit-norm complex vector per factor


def normalize_factor(v) -> np.ndarray:
    """Unit-normalize and fix the gauge: first nonzero entry real-positive."""
    a = np.asarray(v, dtype=complex).ravel()
    norm = float(np.linalg.norm(a))
    if norm == 0.0:
        raise ValueError("zero vector cannot be a state")
    a = a / norm
    for x in a:
        if abs(x) > 1e-14:
            a = a * (x.conjugate() / abs(x))
            break
    return a


def product_vector(factors: Sequence[np.ndarray]) -> np.ndarray:
    out = np.asarray(factors[0], dtype=complex).ravel()
    for f in factors[1:]:
        out = np.kron(out, np.asarray(f, dtype=complex).ravel())
    return out


def random_product_states(dims: Sequence[int], count: int, seed: int) -> List[np.ndarray]:
    """Per-factor batches of Haar-random unit vectors, shape (count, d_k) each."""
    rng = np.random.default_rng(seed)
    batches = []
    for d in dims:
        z = rng.standard_normal((count, d)) + 1j * rng.standard_normal((count, d))
        z /= np.linalg.norm(z, axis=1, keepdims=True)
        batches.append(z)
    return batches


def distribution_batch(basis: BellBasis, factor_batches: Sequence[np.ndarray]) -> np.ndarray:
    """P values for a batch of product states; shape (count, num_states)."""
    gammas = factor_batches[0]
    for b in factor_batches[1:]:
        gammas = np.einsum("ni,nj->nij", gammas, b).reshape(gammas.shape[0], -1)
    amps = gammas.conj() @ basis.states.T
    return np.abs(amps) ** 2


def distribution(basis: BellBasis, gamma: Sequence[np.ndarray]) -> Dict[BellIndex, float]:
    """P_idx = |<gamma|psi_idx>|^2 for every Bell index."""
    if len(gamma) != len(basis.dims):
        raise ValueError("factor count does not match dimension profile")
    for f, d in zip(gamma, basis.dims):
        v = np.asarray(f, dtype=complex).ravel()
        if v.shape != (d,):
            raise ValueError("factor dimension mismatch")
        if abs(np.linalg.norm(v) - 1.0) > 1e-9:
            raise ValueError("factors must be unit-norm")
    amps = basis.states.conj() @ product_vector(gamma)
    probs = np.abs(amps) ** 2
    return {idx: float(probs[r]) for r, idx in enumerate(basis.index_order)}


def q_vector(basis: BellBasis, q: Dict[BellIndex, object]) -> np.ndarray:
    """Dense weight vector aligned with the basis ordering; validates q."""
    vec = np.zeros(basis.num_states)
    for idx, val in q.items():
        vec[basis.row(idx)] = float(val)
    if np.any(vec < -TOL_EQ):
        raise ValueError("q weights must be nonnegative")
    if abs(float(vec.sum()) - 1.0) > 1e-9:
        raise ValueError(f"q weights must sum to 1, got {vec.sum()!r}")
    return vec


def c_gamma(q: Dict[BellIndex, object] | np.ndarray, dist: Dict[BellIndex, float]) -> float:
    """C(gamma) = sum_idx q_idx P_idx for a distribution produced above."""
    if isinstance(q, dict):
        qs = 0.0
        total = 0.0
        for idx, val in q.items():
            w = float(val)
            if w < -TOL_EQ:
                raise ValueError("q weights must be nonnegative")
            qs += w
            total += w * dist[tuple(idx)]
        if abs(qs - 1.0) > 1e-9:
            raise ValueError(f"q weights must sum to 1, got {qs}")
        return total
    raise TypeError("q must be a Bell-index -> weight mapping")


# ---------------------------------------------------------------------------
# Oracle: global minimization of C over product states
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    c_min: float
    argmin: ProductState
    starts: int
    iterations: int


def _structured_factors(d: int) -> List[np.ndarray]:
    """Deterministic candidate factor states: basis vectors, uniform vectors
    with root-of-unity phases, and two-level superpositions thereof."""
    out: List[np.ndarray] = [np.eye(d, dtype=complex)[k] for k in range(d)]
    w = np.exp(2j * np.pi / d)
    phase_range = range(d)
    if d == 2:
        phases = [1.0, -1.0, 1j, -1j]
        for p in phases:
            out.append(np.array([1.0, p], dtype=complex) / math.sqrt(2))
    else:
        for ks in np.ndindex(*(d,) * (d - 1)):
            v = np.concatenate(([1.0], w ** np.asarray(ks, dtype=float)))
            out.append(v / math.sqrt(d))
        for i in range(d):
            for j in range(i + 1, d):
                for k in phase_range:
                    v = np.zeros(d, dtype=complex)
                    v[i] = 1.0
                    v[j] = w**k
                    out.append(v / math.sqrt(2))
                    v2 = v.copy()
                    v2[j] = -(w**k)
                    out.append(v2 / math.sqrt(2))
    return out


def effective_matrix(t: np.ndarray, dims: Sequence[int], factors: ProductState, f: int) -> np.ndarray:
    """<other factors| T |other factors>: the Hermitian form seen by factor f."""
    n = len(dims)
    tt = t.reshape(tuple(dims) + tuple(dims))
    # Move factor f's row/col axes to the front, flatten the rest.
    order = [f] + [g for g in range(n) if g != f]
    axes = order + [n + g for g in order]
    tt = tt.transpose(axes)
    d_f = dims[f]
    rest = math.prod(dims) // d_f
    tt = tt.reshape(d_f, rest, d_f, rest)
    other = None
    for g in range(n):
        if g == f:
            continue
        v = factors[g]
        other = v if other is None else np.kron(other, v)
    if other is None:
        return t
    return np.einsum("r,arbs,s->ab", other.conj(), tt, other, optimize=True)


def _seesaw(t: np.ndarray, dims: Sequence[int], start: ProductState, iters: int, minimize: bool = True):
    """Alternating exact single-factor updates; returns (value, factors, sweeps)."""
    factors = [normalize_factor(v) for v in start]
    gamma = product_vector(factors)
    val = float(np.real(gamma.conj() @ t @ gamma))
    sweeps = 0
    for sweeps in range(1, iters + 1):
        prev = val
        for f in range(len(dims)):
            h = effective_matrix(t, dims, factors, f)
            w, v = np.linalg.eigh(0.5 * (h + h.conj().T))
            col = 0 if minimize else -1
            factors[f] = normalize_factor(v[:, col])
        gamma = product_vector(factors)
        val = float(np.real(gamma.conj() @ t @ gamma))
        if abs(prev - val) < 1e-14:
            break
    return val, factors, sweeps


def _angles_of(v: np.ndarray) -> np.ndarray:
    """Spherical angles (d-1 polar, d-1 phases) of a gauge-fixed unit vector."""
    d = v.shape[0]
    mags = np.abs(v)
    thetas = []
    rem = 1.0
    for k in range(d - 1):
        c = min(1.0, mags[k] / math.sqrt(rem)) if rem > 1e-30 else 1.0
        thetas.append(math.acos(min(1.0, max(0.0, c))))
        rem = max(0.0, rem - mags[k] ** 2)
    phases = [math.atan2(v[k].imag, v[k].real) for k in range(1, d)]
    return np.array(thetas + phases)


def _vector_of(angles: np.ndarray, d: int) -> np.ndarray:
    thetas, phases = angles[: d - 1], angles[d - 1 :]
    mags = []
    rem = 1.0
    for k in range(d - 1):
        mags.append(math.sqrt(rem) * math.cos(thetas[k]))
        rem = rem * math.sin(thetas[k]) ** 2
    mags.append(math.sqrt(max(0.0, rem)))
    v = np.array(mags, dtype=complex)
    for k in range(1, d):
        v[k] *= complex(math.cos(phases[k - 1]), math.sin(phases[k - 1]))
    return normalize_factor(v)


def _coordinate_descent(t: np.ndarray, dims: Sequence[int], factors: ProductState, tol: float = 1e-10):
    """Angle-wise descent with step halving; cheap polish after the see-saw."""

    def value(fs: ProductState) -> float:
        g = product_vector(fs)
        return float(np.real(g.conj() @ t @ g))

    angles = [_angles_of(f) for f in factors]
    best = value(factors)
    step = 0.1
    while step > tol:
        improved = False
        for f in range(len(dims)):
            for k in range(angles[f].shape[0]):
                for sgn in (1.0, -1.0):
                    trial = [a.copy() for a in angles]
                    trial[f][k] += sgn * step
                    fs = [_vector_of(a, d) for a, d in zip(trial, dims)]
                    cand = value(fs)
                    if cand < best - 1e-15:
                        angles, best, improved = trial, cand, True
                        break
        if not improved:
            step *= 0.5
    return best, [_vector_of(a, d) for a, d in zip(angles, dims)]


def _batched_values(t: np.ndarray, batches: List[np.ndarray]) -> np.ndarray:
    gam = batches[0]
    for b in batches[1:]:
        gam = np.einsum("ni,nj->nij", gam, b).reshape(gam.shape[0], -1)
    return np.real(np.einsum("ni,ij,nj->n", gam.conj(), t, gam))


def _batched_seesaw(t: np.ndarray, dims: Sequence[int], batches: List[np.ndarray], sweeps: int):
    """Alternating exact single-factor updates on a whole batch of starts."""
    n = len(dims)
    total = math.prod(dims)
    tt_by_factor = []
    for f in range(n):
        order = [f] + [g for g in range(n) if g != f]
        axes = order + [n + g for g in order]
        d_f = dims[f]
        tt = t.reshape(tuple(dims) + tuple(dims)).transpose(axes)
        tt_by_factor.append(tt.reshape(d_f, total // d_f, d_f, total // d_f))
    cur = [b.copy() for b in batches]
    for _ in range(sweeps):
        for f in range(n):
            other = None
            for g in range(n):
                if g == f:
                    continue
                other = cur[g] if other is None else np.einsum(
                    "ni,nj->nij", other, cur[g]
                ).reshape(cur[g].shape[0], -1)
            if other is None:
                h = np.broadcast_to(t, (cur[0].shape[0],) + t.shape)
            else:
                h = np.einsum("nr,arbs,ns->nab", other.conj(), tt_by_factor[f], other, optimize=True)
            h = 0.5 * (h + np.conj(np.swapaxes(h, -1, -2)))
            _, vecs = np.linalg.eigh(h)
            ground = vecs[..., 0]
            ground /= np.linalg.norm(ground, axis=1, keepdims=True)
            cur[f] = ground
    return cur, _batched_values(t, cur)


def minimize_quadratic_form(
    t: np.ndarray,
    dims: Sequence[int],
    grid_density: int = 24,
    refine_iters: int = 200,
    seed: int = 42,
    maximize: bool = False,
) -> OracleResult:
    """Global product-state minimum of <gamma|T|gamma> (or maximum).

    Deterministic for a fixed seed: structured starts plus seeded random
    starts, exact per-factor eigen-updates run on every start (batched),
    deep refinement of the best, then a coordinate-descent polish.
    """
    if grid_density < 4:
        raise ValueError("grid_density must be >= 4")
    dims = tuple(int(d) for d in dims)
    t = np.asarray(t, dtype=complex)
    work = -t if maximize else t

    structured = [_structured_factors(d) for d in dims]
    counts = [len(s) for s in structured]
    total_struct = math.prod(counts)
    batches = [[] for _ in dims]
    if total_struct <= 4096:
        for combo in np.ndindex(*counts):
            for f in range(len(dims)):
                batches[f].append(structured[f][combo[f]])
    else:
        rng0 = np.random.default_rng(seed ^ 0x5EED)
        for _ in range(4096):
            for f in range(len(dims)):
                batches[f].append(structured[f][int(rng0.integers(len(structured[f])))])
    n_random = max(grid_density * grid_density, 64)
    rand = random_product_states(dims, n_random, seed)
    start_batches = [
        np.vstack([np.asarray(batches[f]), rand[f]]).astype(complex) for f in range(len(dims))
    ]
    n_starts = start_batches[0].shape[0]

    # Short batched see-saw on every start, then deep refinement of the best.
    refined, vals = _batched_seesaw(work, dims, start_batches, sweeps=6)
    order = np.argsort(vals, kind="stable")
    best_val, best_factors, total_sweeps = math.inf, None, 6 * n_starts
    for i in order[:12]:
        st = [refined[f][int(i)] for f in range(len(dims))]
        val, fs, sweeps = _seesaw(work, dims, st, refine_iters)
        total_sweeps += sweeps
        if val < best_val - 1e-15:
            best_val, best_factors = val, fs
    cd_val, cd_factors = _coordinate_descent(work, dims, best_factors)
    if cd_val < best_val:
        best_val, best_factors = cd_val, cd_factors

    sign = -1.0 if maximize else 1.0
    return OracleResult(
        c_min=sign * best_val,
        argmin=[normalize_factor(f) for f in best_factors],
        starts=n_starts,
        iterations=total_sweeps,
    )


def oracle_min_c(
    basis: BellBasis,
    q: Dict[BellIndex, object],
    grid_density: int = 24,
    refine_iters: int = 200,
    seed: int = 42,
) -> OracleResult:
    """Minimum of C(gamma) = sum q_idx |<gamma|psi_idx>|^2 over product states."""
    qv = q_vector(basis, q)
    t = basis.mixture(qv)
    return minimize_quadratic_form(t, basis.dims, grid_density, refine_iters, seed)


# ---------------------------------------------------------------------------
# Multi-qubit polygon boundary check
# ---------------------------------------------------------------------------


def curve_check_multiqubit(n: int, lam: float, grid: int = 4001) -> Tuple[float, float]:
    """(numeric max of P+ subject to P- = lam * P+, supporting-line value).

    ``P+`` and ``P-`` are the distributions of the all-zero and the single
    phase-flip Bell index.  The numeric maximizer sweeps the symmetric
    angle ansatz (all factors at a common polar angle, relative phase
    free) with step-halving refinement; the line joins the two attainable
    extreme points (1/2, 1/2) and (1/2^(n-1), 0).
    """
    if n < 2:
        raise ValueError("need at least two qubit factors")
    if not 0.0 <= lam <= 1.0:
        raise ValueError("lambda must lie in [0, 1]")
    line = 1.0 / (2 ** (n - 1) - lam * (2 ** (n - 1) - 2))

    def p_plus_at(theta: float) -> float:
        u = math.cos(theta) ** n
        v = math.sin(theta) ** n
        s2 = u * u + v * v
        if u * v < 1e-300:
            # One product vanishes, so P- = P+ is forced: on the ray only for lam = 1.
            return 0.5 * s2 if abs(lam - 1.0) < 1e-15 else -math.inf
        cos_phi = (1.0 - lam) * s2 / ((1.0 + lam) * 2.0 * u * v)
        if cos_phi > 1.0 + 1e-12:
            return -math.inf
        cos_phi = min(1.0, cos_phi)
        return 0.5 * (s2 + 2.0 * u * v * cos_phi)

    thetas = np.linspace(0.0, math.pi / 2, grid)
    vals = np.array([p_plus_at(t) for t in thetas])
    k = int(np.argmax(vals))
    best_t, best = float(thetas[k]), float(vals[k])
    step = float(thetas[1] - thetas[0])
    while step > 1e-12:
        for cand in (best_t - step, best_t + step):
            if 0.0 <= cand <= math.pi / 2:
                v = p_plus_at(cand)
                if v > best:
                    best, best_t = v, cand
        step *= 0.5
    return best, line
