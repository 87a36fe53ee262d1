"""Exact continued fractions of ``c/q`` and order recovery from a sample.

Integer arithmetic only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ConvergentList:
    quotients: tuple[int, ...]
    convergents: tuple[Fraction, ...]

    def evaluate(self, upto: int | None = None) -> Fraction:
        """Fold the first ``upto`` partial quotients back into a fraction."""
        qs = self.quotients[:upto]
        value = Fraction(qs[-1])
        for a in reversed(qs[:-1]):
            value = a + 1 / value
        return value


def continued_fraction(c: int, q: int) -> ConvergentList:
    if q == 0:
        raise ZeroDivisionError("continued fraction of c/0")
    if q < 0 or c < 0:
        raise ValueError(f"expected non-negative c and positive q, got {c}/{q}")
    quotients = []
    convergents = []
    # h/k recurrences seeded with h_{-1}/k_{-1} = 1/0, h_{-2}/k_{-2} = 0/1
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    num, den = c, q
    while den:
        a, rem = divmod(num, den)
        quotients.append(a)
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        convergents.append(Fraction(h, k))
        num, den = den, rem
    return ConvergentList(tuple(quotients), tuple(convergents))


def within_half_step(c: int, q: int, d: int, r: int) -> bool:
    """``|c/q - d/r| <= 1/(2q)``, i.e. ``2|dq - rc| <= r``."""
    return 2 * abs(d * q - r * c) <= r


def recover_order(c: int, q: int, n: int) -> tuple[int, int] | None:
    """Convergent ``d/r`` of ``c/q`` with the largest ``r < n`` inside the rounding bound."""
    if not 0 <= c < q:
        raise ValueError(f"outcome {c} outside [0, {q})")
    best = None
    for frac in continued_fraction(c, q).convergents:
        d, r = frac.numerator, frac.denominator
        if r >= n:
            break
        if within_half_step(c, q, d, r):
            best = (d, r)
    return best


def verify_bound_chain(q: int, n: int, r: int) -> bool:
    """Whether ``1/(2q) <= 1/(2n**2) < 1/(2r**2)`` holds for these integers."""
    if q < 1 or n < 1 or r < 1:
        return False
    half_q = Fraction(1, 2 * q)
    half_n = Fraction(1, 2 * n * n)
    half_r = Fraction(1, 2 * r * r)
    return half_q <= half_n < half_r
