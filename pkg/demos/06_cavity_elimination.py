"""Checking the cavity elimination that underlies the reduced qubit models.

The full picture couples the qubit to a lossy cavity through both sideband
amplitudes; when kappa dwarfs the effective couplings the cavity follows
adiabatically and the qubit obeys the squeezed-bath master equation with
gamma = 4 g^2 alpha^2 / kappa.  The trajectory error shrinks roughly as the
inverse ratio squared.
"""

from synthsqueeze import validate_elimination

records = validate_elimination(kappa_ratio_grid=[5.0, 10.0, 20.0, 50.0],
                               r=1.0, t_final_over_gamma=5.0, n_fock=10)
print(" kappa / (g max|alpha|)    max trace distance (full vs reduced)")
for rec in records:
    print(f"     {rec['kappa_ratio']:6.1f}                 {rec['max_trace_distance']:.5f}")
