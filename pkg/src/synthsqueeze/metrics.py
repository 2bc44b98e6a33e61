"""Entanglement and state-quality measures for density matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import DensityMatrix, kron, pauli

__all__ = [
    "MetricSet",
    "concurrence",
    "purity",
    "fidelity",
    "trace_distance",
    "two_qubit_metrics",
]

_SYSY = kron(pauli("y"), pauli("y")).matrix
_RANGE_TOL = 1e-9


def concurrence(rho: DensityMatrix) -> float:
    """Two-qubit concurrence, C = max(0, l1 - l2 - l3 - l4).

    The l_i are the decreasingly ordered square roots of the eigenvalues of
    rho (sy(x)sy) conj(rho) (sy(x)sy), computed here as the singular values
    of sqrt(rho) (sy(x)sy) conj(sqrt(rho)): taking square roots after a
    4x4 eigendecomposition amplifies the ~1e-16 noise on the vanishing
    eigenvalues to ~1e-8, which an SVD avoids.
    """
    if rho.dims != (2, 2):
        raise ValueError(f"concurrence requires dims (2, 2), got {rho.dims}")
    evals, vecs = np.linalg.eigh(rho.matrix)
    root = (vecs * np.sqrt(np.clip(evals, 0.0, None))) @ vecs.conj().T
    lam = np.linalg.svd(root @ _SYSY @ root.conj(), compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2)."""
    return float(np.trace(rho.matrix @ rho.matrix).real)


def fidelity(rho: DensityMatrix, target_pure_state: np.ndarray) -> float:
    """<psi|rho|psi> against a normalized pure target."""
    psi = np.asarray(target_pure_state, dtype=complex).ravel()
    if psi.size != rho.matrix.shape[0]:
        raise ValueError(
            f"target dimension {psi.size} does not match state dimension "
            f"{rho.matrix.shape[0]}"
        )
    psi = psi / np.linalg.norm(psi)
    return float((psi.conj() @ rho.matrix @ psi).real)


def trace_distance(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """(1/2) Tr |rho - sigma|."""
    if rho.dims != sigma.dims:
        raise ValueError(f"dims mismatch: {rho.dims} vs {sigma.dims}")
    return float(0.5 * np.sum(np.abs(np.linalg.eigvalsh(rho.matrix - sigma.matrix))))


@dataclass(frozen=True)
class MetricSet:
    """Concurrence and purity of a two-qubit state, optional target fidelity."""

    concurrence: float
    purity: float
    fidelity_to_target: float | None = None

    def __post_init__(self):
        if not -_RANGE_TOL <= self.concurrence <= 1 + _RANGE_TOL:
            raise ValueError(f"concurrence {self.concurrence} out of [0, 1]")
        if not 0.25 - _RANGE_TOL <= self.purity <= 1 + _RANGE_TOL:
            raise ValueError(f"purity {self.purity} out of [1/4, 1]")
        if self.fidelity_to_target is not None and not (
            -_RANGE_TOL <= self.fidelity_to_target <= 1 + _RANGE_TOL
        ):
            raise ValueError(f"fidelity {self.fidelity_to_target} out of [0, 1]")


def two_qubit_metrics(rho: DensityMatrix, target: np.ndarray | None = None) -> MetricSet:
    return MetricSet(
        concurrence=concurrence(rho),
        purity=purity(rho),
        fidelity_to_target=None if target is None else fidelity(rho, target),
    )
