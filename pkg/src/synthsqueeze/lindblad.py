"""Lindblad models, vectorized Liouvillians, spectra, steady states, trajectories.

Vectorization is column-stacking throughout: vec(A X B) = (B^T (x) A) vec(X),
with vec(X) = X.flatten(order="F").  The Liouvillian of

    drho/dt = -i[H, rho] + sum_k g_k (J_k rho J_k^dag - {J_k^dag J_k, rho}/2)

is then

    L = -i (I(x)H - H^T(x)I)
        + sum_k g_k [ conj(J_k)(x)J_k - I(x)(J_k^dag J_k)/2 - (J_k^dag J_k)^T(x)I/2 ].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np
import scipy.linalg as la

from .operators import DensityMatrix, Operator

__all__ = [
    "LindbladModel",
    "Superoperator",
    "SpectralResult",
    "NumericalError",
    "DEGENERACY_RTOL",
    "liouvillian",
    "steady_state",
    "spectrum",
    "evolve",
    "vec",
    "unvec",
]

# Relative cut below which a singular value / eigenvalue real part counts as
# zero.  1e-10 (the first choice) misclassifies the near-degenerate slow mode
# of the squeezed-bath pair model at r ~ 6, where the smallest nonzero
# singular value is ~6.6e-11 x s_max; 1e-12 separates cleanly for r <= 6
# while staying three decades above eps * s_max.
DEGENERACY_RTOL = 1e-12

# Steady-state extraction: eigenvalues in [-EIG_CLIP_TOL, 0) are clipped to 0
# and the state renormalized; anything more negative is an extraction failure.
EIG_CLIP_TOL = 1e-8

MAX_SPECTRUM_DIM = 8


class NumericalError(RuntimeError):
    """A numerical procedure failed (non-convergence, drift, truncation)."""


@dataclass(frozen=True, eq=False)
class LindbladModel:
    """One Hamiltonian plus (rate, jump operator) pairs, all on the same dims."""

    hamiltonian: Operator
    jumps: tuple

    def __post_init__(self):
        jumps = tuple((float(rate), op) for rate, op in self.jumps)
        for rate, op in jumps:
            if rate < 0:
                raise ValueError(f"jump rate must be nonnegative, got {rate}")
            if op.dims != self.hamiltonian.dims:
                raise ValueError(
                    f"jump dims {op.dims} differ from Hamiltonian dims "
                    f"{self.hamiltonian.dims}"
                )
        object.__setattr__(self, "jumps", jumps)

    @property
    def dims(self) -> tuple[int, ...]:
        return self.hamiltonian.dims

    @property
    def dim(self) -> int:
        return self.hamiltonian.dim

    def conjugated(self, u: Operator) -> "LindbladModel":
        """Model in the frame rho -> U rho U^dag (H -> UHU^dag, J -> UJU^dag)."""
        ud = u.dag()
        return LindbladModel(
            u @ self.hamiltonian @ ud,
            tuple((rate, u @ op @ ud) for rate, op in self.jumps),
        )


@dataclass(frozen=True, eq=False)
class Superoperator:
    """D^2 x D^2 matrix acting on column-stacked density matrices."""

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        d = prod(self.dims)
        if m.shape != (d * d, d * d):
            raise ValueError(
                f"superoperator shape {m.shape} does not match dims {self.dims}"
            )
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", tuple(int(x) for x in self.dims))

    @property
    def dim(self) -> int:
        return prod(self.dims)


@dataclass(frozen=True, eq=False)
class SpectralResult:
    """Liouvillian spectral data.

    eigenvalues: sorted by descending real part (None when only the null
    space was computed); gap: smallest nonzero decay rate |Re lambda| (None
    likewise); steady_states: orthogonalized basis of the steady subspace,
    trace-1 representatives where possible; degeneracy: dimension of the
    steady subspace.
    """

    eigenvalues: np.ndarray | None
    gap: float | None
    steady_states: tuple
    degeneracy: int


def vec(matrix: np.ndarray) -> np.ndarray:
    """Column-stack a matrix into a vector."""
    return np.asarray(matrix, dtype=complex).flatten(order="F")


def unvec(v: np.ndarray, dim: int) -> np.ndarray:
    """Inverse of `vec`."""
    return np.asarray(v, dtype=complex).reshape(dim, dim, order="F")


def liouvillian(model: LindbladModel) -> Superoperator:
    """Vectorized generator of the master equation (column-stacking)."""
    h = model.hamiltonian.matrix
    d = model.dim
    eye = np.eye(d, dtype=complex)
    L = -1j * (np.kron(eye, h) - np.kron(h.T, eye))
    for rate, op in model.jumps:
        j = op.matrix
        jdj = j.conj().T @ j
        L += rate * (
            np.kron(j.conj(), j)
            - 0.5 * np.kron(eye, jdj)
            - 0.5 * np.kron(jdj.T, eye)
        )
    return Superoperator(L, model.dims)


def _clean_state(matrix: np.ndarray, dims) -> DensityMatrix:
    """Hermitize, clip tiny negative eigenvalues, renormalize, validate."""
    m = 0.5 * (matrix + matrix.conj().T)
    tr = np.trace(m).real
    if abs(tr) < 1e-12:
        raise NumericalError("extracted steady state has (near-)zero trace")
    m = m / tr
    evals, vecs = np.linalg.eigh(m)
    if evals.min() < -EIG_CLIP_TOL:
        raise NumericalError(
            f"extracted state has eigenvalue {evals.min():.3e} < -{EIG_CLIP_TOL}"
        )
    if evals.min() < 0:
        evals = np.clip(evals, 0.0, None)
        m = (vecs * evals) @ vecs.conj().T
        m /= np.trace(m).real
    return DensityMatrix(Operator(m, dims))


def steady_state(superop: Superoperator, tol: float = DEGENERACY_RTOL) -> SpectralResult:
    """Null space of the Liouvillian via SVD.

    Singular values below tol x (largest singular value) count as null.  Each
    null vector is reshaped, Hermitized as (rho + rho^dag)/2 and
    trace-normalized; for a degenerate steady subspace an orthogonalized
    basis is returned with trace-1 representatives where possible.
    """
    d = superop.dim
    _, s, vh = la.svd(superop.matrix)
    cut = tol * max(s[0], np.finfo(float).tiny)
    null_idx = np.nonzero(s < cut)[0]
    if null_idx.size == 0:
        raise NumericalError(
            "no singular value below threshold; the superoperator does not "
            "annihilate any state (not a valid Liouvillian?)"
        )
    degeneracy = int(null_idx.size)
    if degeneracy == 1:
        states = [_clean_state(unvec(vh[null_idx[0]].conj(), d), superop.dims)]
    else:
        states = _degenerate_basis(
            [unvec(vh[i].conj(), d) for i in null_idx], d, superop.dims
        )
    return SpectralResult(
        eigenvalues=None, gap=None, steady_states=tuple(states), degeneracy=degeneracy
    )


def _degenerate_basis(raw, d: int, dims) -> list:
    """Valid-state representatives spanning a degenerate steady subspace.

    Hermitize and Frobenius-orthonormalize the null basis, anchor on the
    projection of the maximally mixed state (positive for dark-subspace
    degeneracies), and exhibit each remaining direction through the largest
    positivity-preserving mixture with the anchor.
    """
    herm = []
    for m in raw:
        h = 0.5 * (m + m.conj().T)
        for prev in herm:
            h = h - np.trace(prev.conj().T @ h) * prev
        norm = np.sqrt(np.trace(h.conj().T @ h).real)
        if norm > 1e-10:
            herm.append(h / norm)
    mixed = np.eye(d) / d
    anchor_raw = sum(np.trace(h.conj().T @ mixed) * h for h in herm)
    try:
        anchor = _clean_state(anchor_raw, dims)
    except NumericalError:
        anchor = None
    states = []
    for h in herm:
        try:
            states.append(_clean_state(h, dims))
            continue
        except NumericalError:
            pass
        if anchor is None:
            continue
        direction = h - np.trace(h).real * anchor.matrix
        scale = max(np.max(np.abs(direction)), 1e-300)
        direction = direction / scale
        # largest mixing that keeps the state positive, then back off 10%
        lo, hi = 0.0, 1.0
        while np.linalg.eigvalsh(anchor.matrix + hi * direction).min() > 0 and hi < 1e6:
            lo, hi = hi, 2.0 * hi
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if np.linalg.eigvalsh(anchor.matrix + mid * direction).min() >= 0:
                lo = mid
            else:
                hi = mid
        if lo > 0:
            states.append(_clean_state(anchor.matrix + 0.9 * lo * direction, dims))
    if not states and anchor is not None:
        states.append(anchor)
    return states


def spectrum(superop: Superoperator, tol: float = DEGENERACY_RTOL) -> SpectralResult:
    """Full non-Hermitian eigendecomposition of the Liouvillian.

    The gap is min |Re lambda| over eigenvalues with |Re lambda| above the
    zero cut.  Restricted to Hilbert dimension <= 8 (superoperator side <=
    64); use evolve() for larger systems.
    """
    d = superop.dim
    if d > MAX_SPECTRUM_DIM:
        raise ValueError(
            f"full spectrum restricted to Hilbert dimension <= {MAX_SPECTRUM_DIM} "
            f"(got {d}); use evolve() for time-domain analysis of larger systems"
        )
    evals = la.eigvals(superop.matrix)
    order = np.argsort(-evals.real, kind="stable")
    evals = evals[order]
    scale = np.max(np.abs(evals))
    cut = tol * max(scale, np.finfo(float).tiny)
    if evals.real[0] > cut:
        raise NumericalError(
            f"eigenvalue with positive real part {evals.real[0]:.3e}: "
            "not a dissipative generator"
        )
    if np.min(np.abs(evals.real)) > cut:
        raise NumericalError("no eigenvalue with vanishing real part found")
    nonzero = np.abs(evals.real) > cut
    gap = float(np.min(np.abs(evals.real[nonzero]))) if np.any(nonzero) else 0.0
    null = steady_state(superop, tol)
    return SpectralResult(
        eigenvalues=evals,
        gap=gap,
        steady_states=null.steady_states,
        degeneracy=null.degeneracy,
    )


def _rate_scale(model: LindbladModel) -> float:
    """Operator-norm estimate of the Liouvillian magnitude."""
    scale = 2.0 * la.norm(model.hamiltonian.matrix, 2)
    for rate, op in model.jumps:
        scale += 2.0 * rate * la.norm(op.matrix, 2) ** 2
    return max(scale, np.finfo(float).tiny)


def _rhs(rho: np.ndarray, h: np.ndarray, jumps) -> np.ndarray:
    out = -1j * (h @ rho - rho @ h)
    for rate, j, jd, jdj in jumps:
        out += rate * (j @ rho @ jd - 0.5 * (jdj @ rho + rho @ jdj))
    return out


def evolve(
    model: LindbladModel,
    rho0: DensityMatrix,
    t_final: float,
    dt: float | None = None,
    sample_stride: int = 1,
    convergence_check: bool = False,
):
    """Fixed-step RK4 integration of the master equation in operator form.

    Returns a list of (time, DensityMatrix) samples every `sample_stride`
    steps (the final time is always included).  The default step is
    0.02 / (operator-norm estimate of the generator); the step is rounded
    so an integer number of steps lands exactly on t_final.  Raises
    NumericalError if the raw trace drifts beyond 1e-6, advising a smaller
    dt.  With convergence_check=True the integration is repeated at dt/2
    and the final states must agree within 1e-6 trace distance.
    """
    if rho0.dims != model.dims:
        raise ValueError(f"rho0 dims {rho0.dims} do not match model dims {model.dims}")
    if t_final <= 0:
        raise ValueError(f"t_final must be positive, got {t_final}")
    if dt is None:
        dt = 0.02 / _rate_scale(model)
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt}")
    sample_stride = max(1, int(sample_stride))

    n_steps = max(1, int(np.ceil(t_final / dt)))
    dt = t_final / n_steps
    h = model.hamiltonian.matrix
    jumps = [
        (rate, op.matrix, op.matrix.conj().T, op.matrix.conj().T @ op.matrix)
        for rate, op in model.jumps
    ]

    rho = rho0.matrix.astype(complex)
    samples = [(0.0, rho0)]
    for k in range(1, n_steps + 1):
        k1 = _rhs(rho, h, jumps)
        k2 = _rhs(rho + 0.5 * dt * k1, h, jumps)
        k3 = _rhs(rho + 0.5 * dt * k2, h, jumps)
        k4 = _rhs(rho + dt * k3, h, jumps)
        rho = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        drift = abs(np.trace(rho).real - 1.0)
        if drift > 1e-6:
            raise NumericalError(
                f"trace drifted by {drift:.3e} at t = {k * dt:.6g}; "
                "use a smaller dt"
            )
        if k % sample_stride == 0 or k == n_steps:
            m = rho / np.trace(rho).real
            samples.append((k * dt, _clean_state(m, model.dims)))

    if convergence_check:
        ref = evolve(model, rho0, t_final, dt=0.5 * dt,
                     sample_stride=2 * n_steps, convergence_check=False)
        delta = ref[-1][1].matrix - samples[-1][1].matrix
        dist = 0.5 * np.sum(np.abs(np.linalg.eigvalsh(delta)))
        if dist > 1e-6:
            raise NumericalError(
                f"step-halving check failed: final states differ by {dist:.3e}"
            )
    return samples
