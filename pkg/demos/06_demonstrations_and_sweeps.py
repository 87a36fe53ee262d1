"""
Register widths of published demonstrations, and what small q actually does
============================================================================

The audit applies exact integer checks to the published register widths.
The sweep then measures order-recovery rates as the first register shrinks.
"""

from shorsim import demo_audit, success_sweep

for row in demo_audit():
    print(f"{row.label:16s} s1={row.s1} s2={row.s2}  q_ok={row.q_ok!s:5s}"
          f" width_ok={row.width_ok!s:5s} need s1={row.required_s1}  {row.verdict}")

print("\nn=15, x=7 (r=4 divides every q >= 4)")
for row in success_sweep(15, 7, range(2, 9), trials=200, seed=7):
    print(f"  s={row.s} q={row.q:4d} rate={row.rate:.3f}")

print("\nn=21, x=2 (r=6 never divides q), closed-form sampling")
for row in success_sweep(21, 2, range(4, 11), trials=200, seed=7, fast=True):
    print(f"  s={row.s} q={row.q:5d} rate={row.rate:.3f}")
