"""
Controlled multiplication stages versus per-term invocation counts
===================================================================

One controlled stage per register-1 qubit builds sum_a |a>|x^a mod n>.  The
brute-force oracle writes the same state directly; the audit compares the
two and puts the stage count t beside the count q - 1 (and q(q-1)/2) obtained
by treating each term separately.
"""

from shorsim import RegisterLayout, claim_audit, modexp_circuit, precompute_squares
from shorsim.state import SECOND, marginal_distribution

n, x = 15, 7
print("square table x^(2^i) mod n:", precompute_squares(x, n, 8).entries)

layout = RegisterLayout(t=8, ell=4)
state, stats = modexp_circuit(layout, x, n)
print("stats:", stats)
p2 = marginal_distribution(state, SECOND)
print("register-2 values:", {y: round(float(p), 4) for y, p in enumerate(p2) if p > 0})

# %% the audit, including 20 random subset superpositions run through the same stages
for t in (3, 8, 10):
    rep = claim_audit(RegisterLayout(t, 4), x, n)
    print(f"t={rep.t:2d}  per-term claim={rep.claimed_invocations:5d}  "
          f"summed claim={rep.claimed_total_invocations:7d}  "
          f"dev={rep.max_amplitude_deviation:.1e}  equal={rep.equal}  "
          f"linearity_ok={rep.linearity_ok}")
