"""Master-equation builders for dissipative two-qubit entanglement stabilization.

Every builder returns a LindbladModel with rates in units of a single
reference rate per scheme.  Two-qubit kets are written in the (ground,
excited) = (|0>, |1>) labeling, so |00> is both qubits in the ground state.

Sign conventions.  The squeezed-bath pair dissipators

    J_a = cosh(r) sm1 + sinh(r) sp2,   J_b = sinh(r) sp1 + cosh(r) sm2

stabilize (cosh r |00> - sinh r |11>)/sqrt(cosh 2r)  (`target_state`).  The
drive-assisted collective-loss scheme stabilizes, in its rotated frame, the
sigma_z(1)-flipped partner (cosh r |00> + sinh r |11>)/sqrt(cosh 2r)
(`paired_state`): local y-rotations turn the collective loss operator into
squeezing dissipators whose sinh terms carry a minus sign, which pins that
sign.  The two targets are locally equivalent; all entanglement metrics
coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import atanh, cos, cosh, exp, sin, sinh, sqrt, tanh

import numpy as np
import scipy.constants
import scipy.linalg as la

from .lindblad import LindbladModel, NumericalError
from .operators import Operator, embed, pauli, zero

__all__ = [
    "SqueezeParams",
    "DriveParams",
    "TLParams",
    "single_qubit_squeezed",
    "ideal_tms",
    "synthetic_reduced",
    "balanced",
    "thermal_tms",
    "qubit_cavity_full",
    "dark_state",
    "target_state",
    "paired_state",
    "local_unitary",
    "collective_loss",
    "dissipator_identity_check",
    "solve_asymmetric_drive",
    "tl_model",
    "hp_mean_field_rate",
    "bose_einstein",
    "ket",
]

TWO_QUBITS = (2, 2)

SM1 = embed(pauli("minus"), 0, TWO_QUBITS)
SM2 = embed(pauli("minus"), 1, TWO_QUBITS)
SP1 = embed(pauli("plus"), 0, TWO_QUBITS)
SP2 = embed(pauli("plus"), 1, TWO_QUBITS)
SZ1 = embed(pauli("z"), 0, TWO_QUBITS)
SZ2 = embed(pauli("z"), 1, TWO_QUBITS)
SX1 = embed(pauli("x"), 0, TWO_QUBITS)
SX2 = embed(pauli("x"), 1, TWO_QUBITS)


def ket(label: str) -> np.ndarray:
    """Two-qubit product ket from a label like "01" (0 = ground, 1 = excited)."""
    if len(label) != 2 or any(c not in "01" for c in label):
        raise ValueError(f"expected a two-character 0/1 label, got {label!r}")
    v = np.zeros(4, dtype=complex)
    # ground = basis index 1, excited = basis index 0 of each factor
    i1 = 1 - int(label[0])
    i2 = 1 - int(label[1])
    v[2 * i1 + i2] = 1.0
    return v


K00, K01, K10, K11 = ket("00"), ket("01"), ket("10"), ket("11")


@dataclass(frozen=True)
class SqueezeParams:
    """Modulated-coupling parameters; the reduced decay rate is gamma = 4 g_bar^2 alpha^2 / kappa."""

    r: float
    alpha: float = 1.0
    g_bar: float = 1.0
    kappa: float = 1.0

    def __post_init__(self):
        if self.r < 0:
            raise ValueError(f"squeezing r must be nonnegative, got {self.r}")
        if self.alpha < 0 or self.g_bar < 0:
            raise ValueError("alpha and g_bar must be nonnegative")
        if self.kappa <= 0:
            raise ValueError(f"kappa must be positive, got {self.kappa}")

    @property
    def gamma(self) -> float:
        return 4.0 * self.g_bar**2 * self.alpha**2 / self.kappa


@dataclass(frozen=True)
class DriveParams:
    """Drive calibration for the collective-loss scheme.

    For symmetric coupling (eta = 1): epsilon = 0, delta = mu e^{-2 r0} and
    lam = (mu/2) sqrt(1 - e^{-4 r0}); that relation is validated here.
    """

    mu: float
    r0: float
    eta: float
    delta: float
    lam: float
    epsilon: float

    def __post_init__(self):
        if self.mu < 0:
            raise ValueError(f"mu must be nonnegative, got {self.mu}")
        if self.eta <= 0:
            raise ValueError(f"eta must be positive, got {self.eta}")
        if self.r0 < 0:
            raise ValueError(f"r0 must be nonnegative, got {self.r0}")
        if self.eta == 1.0:
            if abs(self.epsilon) > 1e-10:
                raise ValueError("symmetric coupling requires epsilon = 0")
            if abs(self.delta - self.mu * exp(-2 * self.r0)) > 1e-10:
                raise ValueError("symmetric coupling requires delta = mu e^{-2 r0}")
            if abs(self.lam - 0.5 * self.mu * sqrt(1 - exp(-4 * self.r0))) > 1e-10:
                raise ValueError(
                    "symmetric coupling requires lam = (mu/2) sqrt(1 - e^{-4 r0})"
                )

    @property
    def beta_minus(self) -> float:
        return self.mu + self.delta + self.epsilon

    @property
    def beta_plus(self) -> float:
        return self.eta * (self.mu - self.delta + self.epsilon)

    @classmethod
    def symmetric(cls, r0: float, mu: float) -> "DriveParams":
        """Closed-form calibration for eta = 1."""
        return cls(
            mu=mu,
            r0=r0,
            eta=1.0,
            delta=mu * exp(-2 * r0),
            lam=0.5 * mu * sqrt(1 - exp(-4 * r0)),
            epsilon=0.0,
        )


@dataclass(frozen=True)
class TLParams:
    """Transmission-line scheme parameters; dl is the qubit spacing error.

    k1, k2 are the wavevectors at the two qubit frequencies (a linear
    dispersion with a 4/6 GHz pair gives k2 = 1.5 k1); rates come out in
    units g_bar^2 / v_g = 1.
    """

    r: float
    k1: float = 2.0 * np.pi
    k2: float = 3.0 * np.pi
    dl: float = 0.0

    def __post_init__(self):
        if self.r < 0:
            raise ValueError(f"squeezing r must be nonnegative, got {self.r}")
        if self.k1 <= 0 or self.k2 <= 0:
            raise ValueError("wavevectors must be positive")

    @property
    def lambda_pair(self) -> float:
        """Pairing-interaction amplitude sinh(r) cosh(r) (sin k1 dl + sin k2 dl)."""
        return sinh(self.r) * cosh(self.r) * (sin(self.k1 * self.dl) + sin(self.k2 * self.dl))


def single_qubit_squeezed(gamma: float, r: float) -> LindbladModel:
    """Qubit in a broadband squeezed bath: one jump cosh(r) sm + sinh(r) sp."""
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    j = cosh(r) * pauli("minus") + sinh(r) * pauli("plus")
    return LindbladModel(zero((2,)), ((gamma, j),))


def ideal_tms(r: float, gamma1: float = 1.0, gamma2: float = 1.0) -> LindbladModel:
    """Two qubits in a two-mode squeezed bath; steady state is `target_state(r)`."""
    if gamma1 <= 0 or gamma2 <= 0:
        raise ValueError("rates must be positive")
    c, s = cosh(r), sinh(r)
    return LindbladModel(
        zero(TWO_QUBITS),
        ((gamma1, c * SM1 + s * SP2), (gamma2, s * SP1 + c * SM2)),
    )


def synthetic_reduced(p: SqueezeParams, amps, flipped: bool = False) -> LindbladModel:
    """Reduced two-qubit model from modulated couplings to two lossy modes.

    amps = (alpha_minus, alpha_plus, beta_minus, beta_plus), complex allowed.
    Jump operators J_a = a_- sm1 + a_+ sp2 and J_b = b_+ sp1 + b_- sm2 at
    rate 4 g_bar^2 / kappa each; flipped=True replaces the qubit-2 raising /
    lowering operators by their partners (qubit 2 state flipped).
    """
    am, ap, bm, bp = (complex(a) for a in amps)
    rate = 4.0 * p.g_bar**2 / p.kappa
    if flipped:
        ja = am * SM1 + ap * SM2
        jb = bp * SP1 + bm * SP2
    else:
        ja = am * SM1 + ap * SP2
        jb = bp * SP1 + bm * SM2
    return LindbladModel(zero(TWO_QUBITS), ((rate, ja), (rate, jb)))


def balanced(m_bar: float, g_bar: float = 1.0, kappa: float = 1.0) -> LindbladModel:
    """Equal-amplitude limit: jumps sm1 + sp2 and sp1 + sm2 at rate 4 m_bar g_bar^2 / kappa.

    The steady space is two-fold degenerate: every nu |Bell><Bell| +
    (1 - nu) I/4 with Bell = (|00> - |11>)/sqrt(2) and nu in [-1/3, 1] is
    stationary.
    """
    if m_bar < 0:
        raise ValueError(f"m_bar must be nonnegative, got {m_bar}")
    rate = 4.0 * m_bar * g_bar**2 / kappa
    return LindbladModel(zero(TWO_QUBITS), ((rate, SM1 + SP2), (rate, SP1 + SM2)))


def thermal_tms(r: float, Gamma: float = 1.0, n_th: float = 0.0) -> LindbladModel:
    """Squeezed-bath pair dissipators with thermal occupation n_th.

    Four jumps: (Gamma (1+n), J_a), (Gamma n, J_a^dag), (Gamma (1+n), J_b),
    (Gamma n, J_b^dag); reduces to `ideal_tms` at n_th = 0.
    """
    if n_th < 0:
        raise ValueError(f"n_th must be nonnegative, got {n_th}")
    if Gamma <= 0:
        raise ValueError(f"Gamma must be positive, got {Gamma}")
    c, s = cosh(r), sinh(r)
    ja = c * SM1 + s * SP2
    jb = s * SP1 + c * SM2
    jumps = [(Gamma * (1.0 + n_th), ja), (Gamma * (1.0 + n_th), jb)]
    if n_th > 0:
        jumps += [(Gamma * n_th, ja.dag()), (Gamma * n_th, jb.dag())]
    return LindbladModel(zero(TWO_QUBITS), tuple(jumps))


def qubit_cavity_full(
    p: SqueezeParams, alpha_plus: complex, alpha_minus: complex, n_fock: int
) -> LindbladModel:
    """Pre-elimination qubit-cavity model on dims (2, n_fock).

    H = g_bar a^dag (a_+ sp + a_- sm) + h.c. with one cavity jump (kappa, a).
    """
    n_fock = int(n_fock)
    if n_fock < 4:
        raise ValueError(f"n_fock must be >= 4, got {n_fock}")
    dims = (2, n_fock)
    from .operators import annihilator  # local import keeps module header lean

    a = embed(annihilator(n_fock), 1, dims)
    sp_ = embed(pauli("plus"), 0, dims)
    sm_ = embed(pauli("minus"), 0, dims)
    half = p.g_bar * (a.dag() @ (complex(alpha_plus) * sp_ + complex(alpha_minus) * sm_))
    h = half + half.dag()
    return LindbladModel(h, ((p.kappa, a),))


def dark_state(alpha: float, phi: float = 0.0) -> np.ndarray:
    """Dark ket of the collective loss operator sm1 + sm2.

    |Phi[alpha, phi]> = sqrt(1-alpha^2)|00> + e^{i phi} alpha (|01> - |10>)/sqrt(2).
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return (
        sqrt(1.0 - alpha**2) * K00
        + np.exp(1j * phi) * alpha / sqrt(2.0) * (K01 - K10)
    )


def target_state(r: float) -> np.ndarray:
    """Steady ket of `ideal_tms`: (cosh r |00> - sinh r |11>)/sqrt(cosh 2r)."""
    return (cosh(r) * K00 - sinh(r) * K11) / sqrt(cosh(2 * r))


def paired_state(r: float) -> np.ndarray:
    """Rotated-frame target of the collective-loss scheme.

    (cosh r |00> + sinh r |11>)/sqrt(cosh 2r); equals sigma_z(1) target_state(r)
    up to global phase, so all entanglement metrics match `target_state`.
    """
    return (cosh(r) * K00 + sinh(r) * K11) / sqrt(cosh(2 * r))


def local_unitary(r: float) -> Operator:
    """Local frame rotation exp(+i th/2 sy) (x) exp(-i th/2 sy), cos th = e^{-2r}.

    Maps the dark family onto the paired form: U[r] |Phi[sqrt(tanh 2r), 0]>
    = `paired_state(r)`.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    theta = np.arccos(exp(-2.0 * r))
    sy = pauli("y").matrix
    u1 = la.expm(0.5j * theta * sy)
    u2 = la.expm(-0.5j * theta * sy)
    return Operator(np.kron(u1, u2), TWO_QUBITS)


def _primed_jumps(d: DriveParams):
    """Collective loss operator rotated to the drive eigenbasis: (J'_1, J'_2, J'_Z)."""
    if d.lam == 0.0:
        # zero-drive limit: the rotation is the identity
        return SM1, d.eta * SM2, zero(TWO_QUBITS)
    if d.eta == 1.0:
        c, s = cosh(d.r0), sinh(d.r0)
        pref = exp(-d.r0)
        j1 = pref * (c * SM1 - s * SP2)
        j2 = pref * (c * SM2 - s * SP1)
        jz = 0.5 * sqrt(1.0 - exp(-4.0 * d.r0)) * (SZ1 - SZ2)
        return j1, j2, jz
    bm, bp = d.beta_minus, d.beta_plus
    j1 = (1.0 / (2.0 * d.mu)) * (bm * SM1 - bp * SP2)
    coeff2 = ((d.mu - d.epsilon) ** 2 - d.delta**2) / (8.0 * d.eta * d.mu * d.lam**2)
    j2 = coeff2 * (bm * SM2 - bp * SP1)
    jz = (d.eta * d.lam / d.mu) * (SZ1 - SZ2)
    return j1, j2, jz


def collective_loss(frame: str, d: DriveParams, Gamma: float = 1.0) -> LindbladModel:
    """Collective loss plus local Rabi drives, in one of three frames.

    lab: H = (delta+eps)/2 sz1 - (delta-eps)/2 sz2 + lam (eta sx1 + sx2) with
    one jump (Gamma, sm1 + eta sm2).  transformed: H' = mu/2 (sz1 - sz2) with
    the single rotated jump J'_1 + J'_2 + J'_Z.  rwa: same H' with the three
    rotated operators as separate jumps.
    """
    if Gamma <= 0:
        raise ValueError(f"Gamma must be positive, got {Gamma}")
    if frame == "lab":
        h = (
            0.5 * (d.delta + d.epsilon) * SZ1
            - 0.5 * (d.delta - d.epsilon) * SZ2
            + d.lam * (d.eta * SX1 + SX2)
        )
        return LindbladModel(h, ((Gamma, SM1 + d.eta * SM2),))
    h = 0.5 * d.mu * (SZ1 - SZ2)
    j1, j2, jz = _primed_jumps(d)
    if frame == "transformed":
        return LindbladModel(h, ((Gamma, j1 + j2 + jz),))
    if frame == "rwa":
        return LindbladModel(h, ((Gamma, j1), (Gamma, j2), (Gamma, jz)))
    raise ValueError(f"unknown frame {frame!r}; expected lab, transformed or rwa")


def dissipator_identity_check(r0: float) -> float:
    """Max |entry| of U J U^dag - (J'_1 + J'_2 + J'_Z) for symmetric coupling."""
    u = local_unitary(r0)
    j = SM1 + SM2
    lhs = (u @ j @ u.dag()).matrix
    j1, j2, jz = _primed_jumps(DriveParams.symmetric(r0, mu=1.0))
    return float(np.max(np.abs(lhs - (j1 + j2 + jz).matrix)))


def _r_of_ratio(t: float, eta: float) -> float:
    """Squeezing reached by the drive ray lam/delta = t (delta > 0 branch)."""
    eps = t * t * (1.0 - eta * eta)
    mu = sqrt((1.0 - eps) ** 2 + 4.0 * t * t)
    ratio = eta * (mu - 1.0 + eps) / (mu + 1.0 + eps)
    return atanh(ratio)


def solve_asymmetric_drive(r: float, mu: float, eta: float) -> DriveParams:
    """Drive parameters (delta, lam, epsilon) stabilizing squeezing r at gap mu.

    eta = 1 uses the closed form.  Otherwise the reachable squeezing is
    capped at artanh(min(eta, 1/eta)) (the dark family's concurrence cannot
    exceed 2 eta/(1+eta^2)); a ValueError reports infeasible targets.  The
    feasible case is solved by bisection on the monotone map r(lam/delta),
    which replaces plain fixed-point substitution (divergent for eta far
    from 1).  The returned parameters satisfy the three defining relations
    to ~1e-14 mu and artanh(beta_+/beta_-) = r.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    if mu <= 0:
        raise ValueError(f"mu must be positive, got {mu}")
    if eta <= 0:
        raise ValueError(f"eta must be positive, got {eta}")
    if eta == 1.0:
        return DriveParams.symmetric(r, mu)
    r_max = atanh(min(eta, 1.0 / eta))
    if r >= r_max:
        raise ValueError(
            f"target squeezing r = {r} is unreachable for eta = {eta}: the "
            f"collective-loss dark family caps at r < {r_max:.6f} "
            f"(concurrence <= 2 eta/(1+eta^2))"
        )
    if r == 0.0:
        return DriveParams(mu=mu, r0=0.0, eta=eta, delta=mu, lam=0.0, epsilon=0.0)
    lo, hi = 0.0, 1.0
    while _r_of_ratio(hi, eta) < r:
        hi *= 2.0
        if hi > 1e15:
            raise NumericalError("failed to bracket the drive ratio")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _r_of_ratio(mid, eta) < r:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-16 * max(1.0, hi):
            break
    t = 0.5 * (lo + hi)
    eps_unit = t * t * (1.0 - eta * eta)
    mu_unit = sqrt((1.0 - eps_unit) ** 2 + 4.0 * t * t)
    scale = mu / mu_unit
    params = DriveParams(
        mu=mu, r0=r, eta=eta,
        delta=scale, lam=t * scale, epsilon=eps_unit * scale,
    )
    r_back = atanh(params.beta_plus / params.beta_minus)
    if abs(r_back - r) > 1e-8:
        raise NumericalError(
            f"solver self-check failed: artanh(beta_+/beta_-) = {r_back} vs r = {r}"
        )
    return params


def tl_model(p: TLParams, include_hamiltonian: bool = True) -> LindbladModel:
    """Two qubits on a transmission line with spacing error dl (rates in g_bar^2/v_g).

    Collective jumps J_j = cosh(r) sm_j + sinh(r) sp_other at rates
    2 cos(k_j dl), four single-qubit jumps at rates 4 sin^2(k_j dl / 2), and
    a pairing Hamiltonian lambda_pair (sm1 sm2 + h.c.) unless disabled.
    """
    x1, x2 = p.k1 * p.dl, p.k2 * p.dl
    if cos(x1) <= 0 or cos(x2) <= 0:
        raise ValueError(
            f"spacing error too large: collective rates 2cos(k dl) must stay "
            f"positive (k1 dl = {x1:.4f}, k2 dl = {x2:.4f})"
        )
    c, s = cosh(p.r), sinh(p.r)
    j1 = c * SM1 + s * SP2
    j2 = c * SM2 + s * SP1
    jumps = [(2.0 * cos(x1), j1), (2.0 * cos(x2), j2)]
    for x, sm_own, sp_other in ((x1, SM1, SP2), (x2, SM2, SP1)):
        w = 4.0 * sin(0.5 * x) ** 2
        if w > 0.0:
            jumps.append((w * c * c, sm_own))
            jumps.append((w * s * s, sp_other))
    if include_hamiltonian:
        pair = SM1 @ SM2
        h = p.lambda_pair * (pair + pair.dag())
    else:
        h = zero(TWO_QUBITS)
    return LindbladModel(h, tuple(jumps))


def hp_mean_field_rate(
    S: float, g_bar: float = 1.0, alpha: float = 1.0, kappa: float = 1.0, r: float = 0.0
) -> float:
    """Mean-field asymptotic rate of the spin-S pair model.

    (16 S g_bar^2 alpha^2 / kappa)(1 - sinh^2(r)/(2S)); the correction
    vanishes in the bosonic limit S -> inf and the formula breaks down when
    sinh^2(r) > 2S.
    """
    if S <= 0:
        raise ValueError(f"S must be positive, got {S}")
    sh2 = sinh(r) ** 2
    if sh2 > 2.0 * S:
        raise ValueError(
            f"mean-field breakdown: sinh^2(r) = {sh2:.4f} exceeds 2S = {2 * S}"
        )
    return 16.0 * S * g_bar**2 * alpha**2 / kappa * (1.0 - sh2 / (2.0 * S))


def bose_einstein(freq_GHz: float, T_K: float) -> float:
    """Thermal occupation 1/(e^{hf/kT} - 1); exactly 0 at T = 0."""
    if freq_GHz <= 0:
        raise ValueError(f"frequency must be positive, got {freq_GHz}")
    if T_K < 0:
        raise ValueError(f"temperature must be nonnegative, got {T_K}")
    if T_K == 0.0:
        return 0.0
    x = scipy.constants.h * freq_GHz * 1e9 / (scipy.constants.k * T_K)
    return float(1.0 / np.expm1(x))
