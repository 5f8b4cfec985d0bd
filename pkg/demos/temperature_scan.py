"""How temperature moves the complexity of the evolved TFD state.

Walks the weak-field point through three regimes: near zero temperature the
complexity freezes at its frequency-only floor, at moderate temperature it
oscillates, and at high temperature it grows like ln(1/beta).
"""

import numpy as np

from magtfd import EvaluationContext, complexity_at, complexity_zero_temp_limit

OMEGA0, OMEGAC = 0.022, 0.095

t = np.linspace(0.0, 2000.0, 4000)
print(f"trap omega0={OMEGA0}, cyclotron omegac={OMEGAC}")
for beta in (1e6, 50.0, 1.0, 0.05):
    ctx = EvaluationContext.build(OMEGA0, OMEGAC, beta)
    c = complexity_at(ctx, t)
    print(f"beta={beta:>8g}:  C in [{c.min():.4f}, {c.max():.4f}]")

ctx = EvaluationContext.build(OMEGA0, OMEGAC, 1.0)
floor = complexity_zero_temp_limit(ctx.freqs, ctx.refs)
print(f"\nzero-temperature floor sqrt(ln^2(1/w1) + ln^2(1/w2)) = {floor:.6f}")
print("every curve above sits at or above this floor; cooling flattens it onto it")
