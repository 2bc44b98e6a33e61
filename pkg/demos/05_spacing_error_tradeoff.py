"""Transmission-line scheme vs qubit placement error.

A spacing error dl turns on single-qubit loss/excitation channels (rates
~ sin^2(k dl / 2)) and a coherent pairing term (amplitude ~ sin(k dl)).
Optimizing the squeezing per dl shows the familiar trade-off: the ideal
point wants r -> infinity, while any finite error pushes the optimum down.
Dropping the pairing Hamiltonian barely moves the curve -- the single-qubit
dissipators do the damage.
"""

from synthsqueeze import sweep_spacing

records = sweep_spacing(dl_over_lambda1_grid=[0.0, 0.001, 0.002, 0.005,
                                              0.01, 0.015, 0.02])
print(" dl/lambda1   r_opt    concurrence   purity    concurrence (no pairing H)")
for rec in records:
    print(f"  {rec['dl_over_lambda1']:.4f}     {rec['r_opt']:.4f}   "
          f"{rec['concurrence']:.6f}     {rec['purity']:.6f}  {rec['concurrence_noH']:.6f}")

worst = max(abs(r["concurrence_noH"] - r["concurrence"]) /
            max(1.0 - r["concurrence"], 1e-12) for r in records)
print(f"\npairing Hamiltonian accounts for at most {100 * worst:.1f}% "
      "of the degradation at any point")
