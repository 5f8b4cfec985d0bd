"""Lloyd bound across temperature: max |dC/dt| never exceeds 2U/(pi hbar).

Sweeps beta over five decades at a strong-field point and prints the margin
at each end plus the two asymptotes: the internal energy approaches the
ground-state energy as beta grows, and the max rate flattens onto its
infinite-temperature plateau as beta shrinks.
"""

import math

import numpy as np

from magtfd import ReferenceFrequencies, lloyd_report, sweep

omega1, omega2 = 0.1, 0.005
omega0, omegac = math.sqrt(omega1 * omega2), omega1 - omega2

betas = np.logspace(-2, 3, 30)
rows = sweep([(float(b), omega0, omegac) for b in betas], ReferenceFrequencies(1.0, 1.0))
report = lloyd_report(rows)

print("beta        rateMax     2U/pi       margin")
for r in rows[::6]:
    print(f"{r.beta:<10.3g}  {r.rate_max:<10.4g}  {r.lloyd_rhs:<10.4g}  {r.lloyd_rhs - r.rate_max:.4g}")

print(f"\nsatisfied {report.satisfied}/{len(rows)}, tightest margin {report.tightest_margin:.4g}")
print(f"ground-state energy (low-T limit of U): {report.ground_state_energy:.4g}")
print(f"high-T max-rate plateau:                {report.high_temp_rate_plateau:.4g}")
