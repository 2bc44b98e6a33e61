import numpy as np
import pytest
import scipy.linalg as la

from synthsqueeze import (
    DensityMatrix,
    MetricSet,
    Operator,
    concurrence,
    fidelity,
    pure_density,
    purity,
    trace_distance,
    two_qubit_metrics,
)
from synthsqueeze.schemes import ket, target_state


def pure_state_concurrence(psi):
    """Independent oracle for pure two-qubit states: C = 2 |a d - b c|."""
    a, b, c, d = np.asarray(psi) / np.linalg.norm(psi)
    return 2.0 * abs(a * d - b * c)


def random_density(rng, dims=(2, 2)):
    d = int(np.prod(dims))
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    m = a @ a.conj().T
    return DensityMatrix(Operator(m / np.trace(m).real, dims))


def random_single_qubit_unitary(rng):
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    return la.expm(1j * (g + g.conj().T))


def werner(nu):
    bell = (ket("00") - ket("11")) / np.sqrt(2)
    m = nu * np.outer(bell, bell.conj()) + 0.25 * (1 - nu) * np.eye(4)
    return DensityMatrix(Operator(m, (2, 2)))


class TestConcurrence:
    def test_bell_state(self):
        bell = (ket("00") - ket("11")) / np.sqrt(2)
        assert abs(concurrence(pure_density(bell, (2, 2))) - 1.0) < 1e-12

    def test_maximally_mixed(self):
        rho = DensityMatrix(Operator(0.25 * np.eye(4), (2, 2)))
        assert concurrence(rho) == 0.0

    @pytest.mark.parametrize("r", [0.2, 0.5, 1.0, 2.0])
    def test_paired_target_equals_tanh2r(self, r):
        rho = pure_density(target_state(r), (2, 2))
        c = concurrence(rho)
        assert abs(c - np.tanh(2 * r)) < 1e-12
        # cross-check against the independent pure-state formula
        assert abs(c - pure_state_concurrence(target_state(r))) < 1e-12

    @pytest.mark.parametrize("nu,expected", [
        (1.0, 1.0),
        (1.0 / 3.0, 0.0),
        (0.6, 0.4),
        (0.0, 0.0),
        (-1.0 / 3.0, 0.0),
    ])
    def test_werner_family(self, nu, expected):
        assert abs(concurrence(werner(nu)) - max(0.0, (3 * nu - 1) / 2)) < 1e-12
        assert abs(concurrence(werner(nu)) - expected) < 1e-12

    def test_local_unitary_invariance(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            rho = random_density(rng)
            u = np.kron(random_single_qubit_unitary(rng), random_single_qubit_unitary(rng))
            rotated = DensityMatrix(Operator(u @ rho.matrix @ u.conj().T, (2, 2)))
            assert abs(concurrence(rho) - concurrence(rotated)) < 1e-9

    def test_range_on_random_states(self):
        rng = np.random.default_rng(29)
        for _ in range(50):
            c = concurrence(random_density(rng))
            assert 0.0 <= c <= 1.0

    def test_wrong_dims(self):
        rng = np.random.default_rng(31)
        with pytest.raises(ValueError, match="dims"):
            concurrence(random_density(rng, dims=(4,)))


class TestStateQuality:
    def test_purity_pure(self):
        rng = np.random.default_rng(37)
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        assert abs(purity(pure_density(psi, (2, 2))) - 1.0) < 1e-12

    def test_purity_maximally_mixed(self):
        rho = DensityMatrix(Operator(0.25 * np.eye(4), (2, 2)))
        assert abs(purity(rho) - 0.25) < 1e-15

    def test_trace_distance_self(self):
        rng = np.random.default_rng(41)
        rho = random_density(rng)
        assert trace_distance(rho, rho) == 0.0

    def test_trace_distance_orthogonal_pure(self):
        a = pure_density(ket("00"), (2, 2))
        b = pure_density(ket("11"), (2, 2))
        assert abs(trace_distance(a, b) - 1.0) < 1e-12

    def test_fidelity_pure_self(self):
        rng = np.random.default_rng(43)
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        assert abs(fidelity(pure_density(psi, (2, 2)), psi) - 1.0) < 1e-12

    def test_dimension_mismatch(self):
        rng = np.random.default_rng(47)
        with pytest.raises(ValueError, match="dims"):
            trace_distance(random_density(rng), random_density(rng, dims=(2,)))
        with pytest.raises(ValueError, match="dimension"):
            fidelity(random_density(rng), np.ones(3))


class TestMetricSet:
    def test_ranges_enforced(self):
        with pytest.raises(ValueError, match="concurrence"):
            MetricSet(concurrence=1.5, purity=1.0)
        with pytest.raises(ValueError, match="purity"):
            MetricSet(concurrence=0.0, purity=0.1)
        with pytest.raises(ValueError, match="fidelity"):
            MetricSet(concurrence=0.0, purity=1.0, fidelity_to_target=2.0)

    def test_two_qubit_metrics(self):
        psi = target_state(1.0)
        m = two_qubit_metrics(pure_density(psi, (2, 2)), target=psi)
        assert abs(m.concurrence - np.tanh(2.0)) < 1e-12
        assert abs(m.purity - 1.0) < 1e-12
        assert abs(m.fidelity_to_target - 1.0) < 1e-12
