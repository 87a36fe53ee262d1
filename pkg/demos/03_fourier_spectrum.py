"""
Outcome spectrum after the Fourier transform
============================================

The simulated state-vector spectrum and the closed-form geometric sum are
computed independently and compared.  When r divides q the peaks are exact;
for n = 21, x = 2 (r = 6) they spread, and the 1/(3 r^2) bound is checked on
every qualifying outcome.
"""

import numpy as np

from shorsim import analytic_distribution, peak_bound_check, simulated_distribution

for n, x, t in [(15, 7, 8), (15, 11, 8), (21, 2, 9)]:
    ana = analytic_distribution(n, x, 1 << t)
    sim = simulated_distribution(n, x, t, n.bit_length())
    top = [c for c in np.argsort(ana.marginal)[::-1][:8] if ana.marginal[c] > 1e-9]
    print(f"n={n} x={x} q={ana.q} r={ana.r}  max|sim-ana|={np.abs(sim.joint - ana.joint).max():.1e}")
    print("   largest outcomes:", {int(c): round(float(ana.marginal[c]), 4) for c in sorted(top)})
    rep = peak_bound_check(n, x, ana.q)
    print(f"   qualifying c: {rep.qualifying}  min P*3r^2 = {rep.min_ratio:.3f}")
