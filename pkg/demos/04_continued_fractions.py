"""
From an outcome c to the order r
=================================
"""

from shorsim import continued_fraction, recover_order, verify_bound_chain

q, n = 512, 21
for c in (85, 171, 256, 341, 427, 0):
    cf = continued_fraction(c, q)
    conv = ", ".join(f"{f.numerator}/{f.denominator}" for f in cf.convergents)
    print(f"c={c:3d}  [{'; '.join(map(str, cf.quotients))}]  convergents {conv}"
          f"  -> {recover_order(c, q, n)}")

print("bound chain q=512, n=21, r=6:", verify_bound_chain(512, 21, 6))
print("bound chain q=8,   n=15, r=4:", verify_bound_chain(8, 15, 4))
