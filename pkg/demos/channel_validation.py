"""Validate the dephasing channel against a brute-force qubit+boson model.

Three independent checks on a single Fock mode bath:

1. the symmetric split propagator converges to the exact propagator with
   third-order local error, so halving the step shrinks the worst state
   deviation by a factor near 8;
2. the analytic channel agrees with the brute-force reduced dynamics;
3. the channel map is completely positive and trace preserving (Choi test).
"""

import numpy as np

from qubit_dephasing import (
    FockMode,
    QubitParams,
    OracleSystem,
    Temperature,
    channel_discrepancy,
    cptp_check,
    split_deviation,
)

system = OracleSystem(e_j=1e10, modes=(FockMode(1e11, 1e10 * np.exp(1j * np.pi / 7), 8),))

for temp, label in ((Temperature.zero(), "T = 0"), (Temperature.finite(2e-11), "beta = 2e-11")):
    dev_t = split_deviation(system, temp, 2e-13, samples=6)
    dev_half = split_deviation(system, temp, 1e-13, samples=6)
    print(f"[{label}]")
    print(f"  split error at t:    {dev_t:.3e}")
    print(f"  split error at t/2:  {dev_half:.3e}")
    print(f"  ratio (8 = O(t^3)):  {dev_t / dev_half:.4f}")
    gap = channel_discrepancy(system, temp, 1e-12, samples=8)
    print(f"  channel vs brute force, worst entry: {gap:.3e}")
    print()

# Choi-matrix CPTP test over a spread of dephasing strengths
for g in (0.0, 1e-5, 0.25, 1.0, 4.0):
    print(f"cptp_check(g = {g:g}):", cptp_check(QubitParams(1e10), g, 1e-12))
