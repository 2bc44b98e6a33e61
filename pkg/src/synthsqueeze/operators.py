"""Dense operator algebra on small tensor-product Hilbert spaces.

Qubit basis order is (|e>, |g>) = (index 0, index 1), so sigma_z = diag(+1, -1)
and sigma_+ = |e><g| raises a qubit from ground to excited.  Kets written |0>,
|1> elsewhere in this package mean ground and excited respectively (index 1
and index 0 of a factor).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

import numpy as np

__all__ = [
    "Operator",
    "DensityMatrix",
    "pauli",
    "annihilator",
    "identity",
    "zero",
    "kron",
    "embed",
    "dagger",
    "partial_trace",
    "pure_density",
]

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
EIGENVALUE_FLOOR = -1e-10


def _as_complex_matrix(matrix) -> np.ndarray:
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"operator matrix must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("operator matrix contains non-finite entries")
    return m


@dataclass(frozen=True, eq=False)
class Operator:
    """Square complex matrix tagged with its tensor-factor dimensions."""

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        m = _as_complex_matrix(self.matrix)
        dims = tuple(int(d) for d in self.dims)
        if any(d < 1 for d in dims):
            raise ValueError(f"dims must be positive, got {dims}")
        if prod(dims) != m.shape[0]:
            raise ValueError(
                f"product of dims {dims} = {prod(dims)} does not match "
                f"matrix side {m.shape[0]}"
            )
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def dag(self) -> "Operator":
        return Operator(self.matrix.conj().T, self.dims)

    def _check_dims(self, other: "Operator"):
        if self.dims != other.dims:
            raise ValueError(f"dims mismatch: {self.dims} vs {other.dims}")

    def __add__(self, other: "Operator") -> "Operator":
        self._check_dims(other)
        return Operator(self.matrix + other.matrix, self.dims)

    def __sub__(self, other: "Operator") -> "Operator":
        self._check_dims(other)
        return Operator(self.matrix - other.matrix, self.dims)

    def __neg__(self) -> "Operator":
        return Operator(-self.matrix, self.dims)

    def __mul__(self, scalar) -> "Operator":
        return Operator(self.matrix * complex(scalar), self.dims)

    __rmul__ = __mul__

    def __matmul__(self, other: "Operator") -> "Operator":
        self._check_dims(other)
        return Operator(self.matrix @ other.matrix, self.dims)

    def __repr__(self):
        return f"Operator(dim={self.dim}, dims={self.dims})"


_PAULI_MATRICES = {
    "identity": np.eye(2, dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
    "plus": np.array([[0, 1], [0, 0]], dtype=complex),
    "minus": np.array([[0, 0], [1, 0]], dtype=complex),
}


def pauli(which: str) -> Operator:
    """Single-qubit operator in the (|e>, |g>) basis.

    `which` is one of "x", "y", "z", "plus", "minus", "identity";
    sigma_plus = (sigma_x + i sigma_y)/2 maps |g> to |e>.
    """
    try:
        m = _PAULI_MATRICES[which]
    except KeyError:
        raise ValueError(
            f"unknown Pauli name {which!r}; expected one of {sorted(_PAULI_MATRICES)}"
        ) from None
    return Operator(m, (2,))


def annihilator(n_fock: int) -> Operator:
    """Truncated bosonic lowering operator on `n_fock` levels (sqrt(n) superdiagonal)."""
    n_fock = int(n_fock)
    if n_fock < 2:
        raise ValueError(f"n_fock must be >= 2, got {n_fock}")
    return Operator(np.diag(np.sqrt(np.arange(1, n_fock)), 1), (n_fock,))


def identity(dims) -> Operator:
    dims = tuple(int(d) for d in (dims if np.iterable(dims) else (dims,)))
    return Operator(np.eye(prod(dims), dtype=complex), dims)


def zero(dims) -> Operator:
    dims = tuple(int(d) for d in (dims if np.iterable(dims) else (dims,)))
    d = prod(dims)
    return Operator(np.zeros((d, d), dtype=complex), dims)


def kron(a: Operator, b: Operator) -> Operator:
    """Tensor product; dims are concatenated."""
    return Operator(np.kron(a.matrix, b.matrix), a.dims + b.dims)


def dagger(a: Operator) -> Operator:
    """Conjugate transpose."""
    return a.dag()


def embed(op: Operator, site: int, dims) -> Operator:
    """Place `op` on tensor factor `site`, identity on every other factor."""
    dims = tuple(int(d) for d in dims)
    if not 0 <= site < len(dims):
        raise ValueError(f"site {site} out of range for dims {dims}")
    if op.dim != dims[site]:
        raise ValueError(
            f"operator dimension {op.dim} does not match dims[{site}] = {dims[site]}"
        )
    out = np.eye(1, dtype=complex)
    for i, d in enumerate(dims):
        out = np.kron(out, op.matrix if i == site else np.eye(d, dtype=complex))
    return Operator(out, dims)


def _partial_trace_matrix(matrix: np.ndarray, dims: tuple[int, ...], keep) -> np.ndarray:
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise ValueError("keep set must not be empty")
    if keep[0] < 0 or keep[-1] >= len(dims):
        raise ValueError(f"keep indices {keep} out of range for dims {dims}")
    n = len(dims)
    t = matrix.reshape(list(dims) * 2)
    # trace out factors not kept, highest index first so axis numbers stay valid
    for site in sorted(set(range(n)) - set(keep), reverse=True):
        t = np.trace(t, axis1=site, axis2=site + t.ndim // 2)
    d_keep = prod(dims[k] for k in keep)
    return t.reshape(d_keep, d_keep)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Valid quantum state: Hermitian, unit trace, nonnegative spectrum.

    Tolerances: hermiticity and trace within 1e-10, eigenvalues >= -1e-10.
    """

    op: Operator
    _eigenvalues: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        m = self.op.matrix
        herm_dev = np.max(np.abs(m - m.conj().T))
        if herm_dev > HERMITICITY_TOL:
            raise ValueError(f"density matrix not Hermitian: max deviation {herm_dev:.3e}")
        tr = np.trace(m)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix trace {tr:.12g} not 1 within {TRACE_TOL}")
        evals = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
        if evals.min() < EIGENVALUE_FLOOR:
            raise ValueError(
                f"density matrix has negative eigenvalue {evals.min():.3e}"
            )
        object.__setattr__(self, "_eigenvalues", evals)

    @property
    def matrix(self) -> np.ndarray:
        return self.op.matrix

    @property
    def dims(self) -> tuple[int, ...]:
        return self.op.dims

    @property
    def eigenvalues(self) -> np.ndarray:
        return self._eigenvalues

    def __repr__(self):
        return f"DensityMatrix(dims={self.dims})"


def partial_trace(rho: DensityMatrix, keep) -> DensityMatrix:
    """Reduced state on the kept tensor factors (trace preserved)."""
    keep = sorted(set(int(k) for k in keep))
    reduced = _partial_trace_matrix(rho.matrix, rho.dims, keep)
    dims = tuple(rho.dims[k] for k in keep)
    return DensityMatrix(Operator(reduced, dims))


def pure_density(psi: np.ndarray, dims) -> DensityMatrix:
    """|psi><psi| as a DensityMatrix; `psi` is normalized first."""
    v = np.asarray(psi, dtype=complex).ravel()
    norm = np.linalg.norm(v)
    if norm == 0:
        raise ValueError("cannot normalize the zero vector")
    v = v / norm
    dims = tuple(int(d) for d in (dims if np.iterable(dims) else (dims,)))
    return DensityMatrix(Operator(np.outer(v, v.conj()), dims))
