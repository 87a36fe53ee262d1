"""Register-1 outcome distribution after exponentiation and transform.

For outcome ``(c, x**k)`` the amplitude is a geometric series over
``a = k + b*r``, ``b = 0 .. m_k - 1`` with ``m_k = ceil((q - k) / r)``.  Its
modulus is ``|sin(pi*m*theta) / sin(pi*theta)| / q`` with ``theta = r*c/q``;
both sine arguments are reduced modulo ``q`` in exact integer arithmetic
before going to floating point, and ``theta`` integral gives exactly ``m``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from shorsim.modexp import _check_coprime, modexp_circuit, modpow, order_bruteforce
from shorsim.qft import qft_first_register
from shorsim.state import NORM_TOL, RegisterLayout


@dataclass
class OutcomeDistribution:
    n: int
    x: int
    q: int
    r: int
    joint: np.ndarray  # shape (q, r), P(c, k)

    @property
    def marginal(self) -> np.ndarray:
        return self.joint.sum(axis=1)

    def total(self) -> float:
        return float(self.joint.sum())

    def to_dict(self) -> dict:
        return {"n": self.n, "x": self.x, "q": self.q, "r": self.r,
                "marginal": [float(p) for p in self.marginal]}


def _series_modulus(m: np.ndarray, rc_mod: np.ndarray, q: int) -> np.ndarray:
    """``|sum_{b<m} exp(2j*pi*b*rc/q)|`` for each pair, with ``rc_mod = r*c mod q``."""
    m = np.asarray(m, dtype=np.int64)
    rc_mod = np.asarray(rc_mod, dtype=np.int64)
    whole = rc_mod == 0
    num_arg = (m * rc_mod) % q
    safe = np.where(whole, 1, rc_mod)
    ratio = np.abs(np.sin(np.pi * num_arg / q) / np.sin(np.pi * safe / q))
    return np.where(whole, m.astype(float), ratio)


def analytic_distribution(n: int, x: int, q: int) -> OutcomeDistribution:
    _check_coprime(x, n)
    if q < 1 or q & (q - 1):
        raise ValueError(f"q must be a power of two, got {q}")
    r = order_bruteforce(x, n)
    c = np.arange(q, dtype=np.int64)
    k = np.arange(r, dtype=np.int64)
    counts = np.maximum(0, (q - k + r - 1) // r)
    rc_mod = (r * c) % q
    mod = _series_modulus(counts[None, :], rc_mod[:, None], q)
    joint = (mod / q) ** 2
    return OutcomeDistribution(n, x, q, r, joint)


def power_cycle(x: int, n: int) -> list[int]:
    """``[x**0, x**1, ..., x**(r-1)] mod n``."""
    return [modpow(x, k, n) for k in range(order_bruteforce(x, n))]


def simulated_distribution(n: int, x: int, t: int, ell: int,
                           mode: str = "fast") -> OutcomeDistribution:
    layout = RegisterLayout(t, ell)
    state, _ = modexp_circuit(layout, x, n)
    state = qft_first_register(state, mode)
    probs = np.abs(state.grid()) ** 2
    cycle = power_cycle(x, n)
    joint = probs[:, cycle]
    stray = probs.sum() - joint.sum()
    if stray > NORM_TOL:
        raise AssertionError(f"{stray:.3g} probability outside the power cycle of {x} mod {n}")
    return OutcomeDistribution(n, x, layout.q, len(cycle), joint)


@dataclass
class PeakBoundReport:
    n: int
    x: int
    q: int
    r: int
    qualifying: list[int]
    min_ratio: float
    passed: bool

    def to_dict(self) -> dict:
        return asdict(self)


def qualifying_outcomes(q: int, r: int) -> list[int]:
    """Outcomes ``c`` with some integer ``d`` satisfying ``|d*q - r*c| <= r/2``."""
    out = []
    for c in range(q):
        d = (r * c) // q
        if min(abs(2 * (d * q - r * c)), abs(2 * ((d + 1) * q - r * c))) <= r:
            out.append(c)
    return out


def peak_bound_check(n: int, x: int, q: int) -> PeakBoundReport:
    """Check ``P(c, k) > 1/(3 r**2)`` on every qualifying ``c`` and every ``k``."""
    dist = analytic_distribution(n, x, q)
    r = dist.r
    cs = qualifying_outcomes(q, r)
    ratio = dist.joint[cs, :] * (3 * r * r)
    min_ratio = float(ratio.min()) if cs else float("inf")
    return PeakBoundReport(n, x, q, r, cs, min_ratio, bool(min_ratio > 1.0))

