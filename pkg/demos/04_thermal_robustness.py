"""How hot can the line get before the entanglement degrades?

Thermal photons enter the pair dissipators as the usual (1 + n) / n ladder.
Sweeping the line temperature for 6 GHz qubits shows the steady concurrence
holding above 0.9 up to roughly 65 mK at r = 1.
"""

from synthsqueeze import sweep_temperature

records = sweep_temperature(r=1.0, Gamma=1.0, freq_GHz=6.0,
                            T_grid=[0.0, 0.02, 0.04, 0.06, 0.065, 0.07, 0.08,
                                    0.10, 0.12, 0.15])
print(" T [mK]    n_th         concurrence   purity")
for rec in records:
    print(f" {rec['T_K'] * 1e3:6.1f}   {rec['n_th']:.6e}   {rec['concurrence']:.6f}     "
          f"{rec['purity']:.6f}")

above = [rec for rec in records if rec["concurrence"] >= 0.9]
print(f"\nconcurrence stays above 0.9 through T = {above[-1]['T_K'] * 1e3:.0f} mK")
