"""Dissipative stabilization of two-qubit entanglement with engineered reservoirs.

Dense Lindblad machinery (operators, Liouvillians, spectra, steady states),
one builder per stabilization scheme, entanglement metrics, and the
parameter sweeps that map out each scheme's performance.
"""

from .operators import (
    DensityMatrix,
    Operator,
    annihilator,
    dagger,
    embed,
    identity,
    kron,
    partial_trace,
    pauli,
    pure_density,
    zero,
)
from .lindblad import (
    LindbladModel,
    NumericalError,
    SpectralResult,
    Superoperator,
    evolve,
    liouvillian,
    spectrum,
    steady_state,
    unvec,
    vec,
)
from .metrics import (
    MetricSet,
    concurrence,
    fidelity,
    purity,
    trace_distance,
    two_qubit_metrics,
)
from .schemes import (
    DriveParams,
    SqueezeParams,
    TLParams,
    balanced,
    bose_einstein,
    collective_loss,
    dark_state,
    dissipator_identity_check,
    hp_mean_field_rate,
    ideal_tms,
    ket,
    local_unitary,
    paired_state,
    qubit_cavity_full,
    single_qubit_squeezed,
    solve_asymmetric_drive,
    synthetic_reduced,
    target_state,
    thermal_tms,
    tl_model,
)
from .experiments import (
    EXPERIMENT_SCHEMAS,
    fit_r_for_concurrence,
    gap_vs_r,
    sweep_gap_vs_mu,
    sweep_spacing,
    sweep_temperature,
    validate_elimination,
)

__version__ = "0.1.0"
