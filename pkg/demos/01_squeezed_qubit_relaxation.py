"""A qubit relaxing into a squeezed reservoir has two transverse decay rates.

The jump operator cosh(r) sigma_- + sinh(r) sigma_+ interferes decay and
excitation: one quadrature of the Bloch vector relaxes at (gamma/2) e^{-2r},
the other at (gamma/2) e^{+2r}.  We read both straight off the Liouvillian
spectrum and confirm them against a trajectory.
"""

import numpy as np

from synthsqueeze import evolve, liouvillian, pauli, pure_density, single_qubit_squeezed, spectrum

gamma, r = 1.0, 1.0
model = single_qubit_squeezed(gamma, r)

result = spectrum(liouvillian(model))
rates = sorted(-result.eigenvalues.real)
print(f"Liouvillian decay rates at r = {r}: {[f'{x:.5f}' for x in rates]}")
print(f"expected transverse pair: {gamma / 2 * np.exp(-2 * r):.5f} "
      f"and {gamma / 2 * np.exp(2 * r):.5f}")
print(f"expected longitudinal:    {gamma * np.cosh(2 * r):.5f}")

# The slow quadrature dominates the late-time transverse dynamics.
plus = pure_density(np.array([1.0, 1.0]) / np.sqrt(2), (2,))
sx = pauli("x").matrix
samples = evolve(model, plus, t_final=20.0, dt=1e-3, sample_stride=2000)
print("\n   t      <sigma_x>        e^{-gamma e^{-2r} t / 2}")
for t, rho in samples:
    expected = np.exp(-0.5 * gamma * np.exp(-2 * r) * t)
    print(f"  {t:5.1f}   {np.trace(sx @ rho.matrix).real: .6f}       {expected:.6f}")

rho_ss = result.steady_states[0]
print(f"\nsteady state is mixed: purity = "
      f"{np.trace(rho_ss.matrix @ rho_ss.matrix).real:.5f} "
      f"(1/2 <= purity < 1 for any r > 0)")
