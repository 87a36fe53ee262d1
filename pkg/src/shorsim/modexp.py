"""Modular exponentiation into register 2, built two independent ways.

``modexp_circuit`` applies one controlled multiplication stage per register-1
qubit (multiplier ``x**(2**i) mod n`` on stage ``i``).  ``modexp_oracle``
writes ``|a>|x**a mod n>`` directly.  ``claim_audit`` compares them and counts
stages against the per-term invocation count ``a`` (``q - 1`` for the top
term, ``q(q-1)/2`` summed over all terms).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd

import numpy as np

from shorsim.gates import CircuitStats, apply_controlled_permutation, mod_mult_perm
from shorsim.state import (STATE_TOL, RegisterLayout, StateVector, max_deviation,
                           uniform_first_register)


def _check_modulus(n: int) -> None:
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")


def _check_coprime(x: int, n: int) -> None:
    _check_modulus(n)
    if gcd(x, n) != 1:
        raise ValueError(f"gcd({x}, {n}) = {gcd(x, n)}, base must be coprime to n")


def modpow(x: int, e: int, n: int) -> int:
    """``x**e mod n``, scanning the bits of ``e`` from the least significant."""
    _check_modulus(n)
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    power = 1
    square = x % n  # x**(2**i) mod n
    while e:
        if e & 1:
            power = power * square % n
        square = square * square % n
        e >>= 1
    return power


def order_bruteforce(x: int, n: int) -> int:
    _check_coprime(x, n)
    r, y = 1, x % n
    while y != 1 % n:
        y = y * x % n
        r += 1
    return r


@dataclass(frozen=True)
class SquareTable:
    x: int
    n: int
    entries: tuple[int, ...]


def precompute_squares(x: int, n: int, t: int) -> SquareTable:
    _check_coprime(x, n)
    entries = []
    square = x % n
    for _ in range(t):
        entries.append(square)
        square = square * square % n
    return SquareTable(x, n, tuple(entries))


def _check_layout(layout: RegisterLayout, x: int, n: int) -> None:
    _check_coprime(x, n)
    if n >= layout.dim2:
        raise ValueError(f"n={n} does not fit in register 2 ({layout.ell} qubits)")


def apply_stages(state: StateVector, x: int, n: int,
                 stats: CircuitStats | None = None) -> StateVector:
    """Apply the ``t`` controlled-multiplication stages to any input state."""
    layout = state.layout
    _check_layout(layout, x, n)
    table = precompute_squares(x, n, layout.t)
    for i, multiplier in enumerate(table.entries):
        state = apply_controlled_permutation(
            state, i, mod_mult_perm(multiplier, n, layout.ell), stats)
    return state


def modexp_circuit(layout: RegisterLayout, x: int, n: int) -> tuple[StateVector, CircuitStats]:
    _check_layout(layout, x, n)
    stats = CircuitStats()
    state = uniform_first_register(layout, 1, stats=stats)
    state = apply_stages(state, x, n, stats)
    return state, stats


def modexp_oracle(layout: RegisterLayout, x: int, n: int) -> StateVector:
    _check_layout(layout, x, n)
    amps = np.zeros(layout.dim, dtype=np.complex128)
    amp = 1.0 / np.sqrt(layout.q)
    for a in range(layout.q):
        amps[layout.index(a, modpow(x, a, n))] = amp
    return StateVector(layout, amps)


@dataclass
class AuditReport:
    n: int
    x: int
    t: int
    claimed_invocations: int
    claimed_total_invocations: int
    max_amplitude_deviation: float
    equal: bool
    linearity_subsets: int
    linearity_max_deviation: float
    linearity_ok: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _subset_state(layout: RegisterLayout, subset: np.ndarray, y_of_a) -> StateVector:
    amps = np.zeros(layout.dim, dtype=np.complex128)
    amp = 1.0 / np.sqrt(len(subset))
    for a in subset:
        amps[layout.index(int(a), y_of_a(int(a)))] = amp
    return StateVector(layout, amps)


def claim_audit(layout: RegisterLayout, x: int, n: int, subsets: int = 20,
                rng: np.random.Generator | None = None) -> AuditReport:
    """Compare circuit and oracle, then check the stages on random subset superpositions.

    Singleton subsets are always included so the pure-state case
    ``(a, 1) -> (a, x**a)`` is exercised alongside the superpositions.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    circuit, stats = modexp_circuit(layout, x, n)
    oracle = modexp_oracle(layout, x, n)
    deviation = max_deviation(circuit, oracle)

    q = layout.q
    picks = [np.array([int(rng.integers(q))])]
    while len(picks) < subsets:
        size = int(rng.integers(1, q + 1))
        picks.append(np.sort(rng.choice(q, size=size, replace=False)))
    lin_dev = 0.0
    for subset in picks:
        before = _subset_state(layout, subset, lambda a: 1)
        after = apply_stages(before, x, n)
        expected = _subset_state(layout, subset, lambda a: modpow(x, a, n))
        lin_dev = max(lin_dev, max_deviation(after, expected))

    return AuditReport(
        n=n, x=x,
        t=stats.controlled_stage_applications,
        claimed_invocations=q - 1,
        claimed_total_invocations=q * (q - 1) // 2,
        max_amplitude_deviation=deviation,
        equal=deviation < STATE_TOL,
        linearity_subsets=len(picks),
        linearity_max_deviation=lin_dev,
        linearity_ok=lin_dev < STATE_TOL,
    )
