"""
Factoring 15 end to end
=======================

Every sample rebuilds the state, transforms, and measures register 1.
"""

from shorsim import ShorConfig, run_shor

for x in (7, 11, 13, 14, 5):
    rep = run_shor(ShorConfig(n=15, x=x, seed=1))
    trail = [(s["c"], s["r"], s["status"]) for s in rep.samples]
    print(f"x={x:2d} method={rep.method:8s} r={rep.verified_r} outcome={rep.outcome:12s}"
          f" factors={rep.factors} samples={trail}")

rep = run_shor(ShorConfig(n=77, x=2, seed=0))
print(f"n=77: s={rep.s} ({rep.s + 7} qubits) r={rep.verified_r} factors={rep.factors}")
print("stats:", rep.stats)
