"""Elementary gates and the controlled register-2 permutation.

Modular multiplication is applied as a permutation of register-2 basis
states conditioned on one register-1 qubit.  ``CircuitStats`` separates the
two cost notions: how many controlled stages were applied, and how many
amplitudes the simulator had to touch doing so.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd

import numpy as np

from shorsim.state import StateVector

X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)
CNOT = np.array([[1, 0, 0, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1],
                 [0, 0, 1, 0]], dtype=np.complex128)


class NotAPermutationError(ValueError):
    """Multiplication by x is not a bijection mod n (gcd(x, n) > 1)."""


@dataclass
class CircuitStats:
    controlled_stage_applications: int = 0
    single_qubit_gate_applications: int = 0
    two_qubit_gate_applications: int = 0
    amplitude_operations: int = 0

    def merge(self, other: "CircuitStats") -> None:
        self.controlled_stage_applications += other.controlled_stage_applications
        self.single_qubit_gate_applications += other.single_qubit_gate_applications
        self.two_qubit_gate_applications += other.two_qubit_gate_applications
        self.amplitude_operations += other.amplitude_operations

    def to_dict(self) -> dict:
        return asdict(self)


def _unpack(state):
    if isinstance(state, StateVector):
        return state.amps, lambda amps: StateVector(state.layout, amps)
    amps = np.asarray(state, dtype=np.complex128)
    return amps, lambda out: out


def _n_qubits(amps: np.ndarray) -> int:
    n = amps.size.bit_length() - 1
    if amps.ndim != 1 or (1 << n) != amps.size:
        raise ValueError(f"state length {amps.size} is not a power of two")
    return n


def apply_single_qubit(state, g: np.ndarray, qubit: int,
                       stats: CircuitStats | None = None):
    """Apply a 2x2 gate to ``qubit`` (bit ``qubit`` of the basis index).

    Accepts a :class:`StateVector` or a raw amplitude array and returns the
    same kind.
    """
    amps, wrap = _unpack(state)
    n = _n_qubits(amps)
    if not 0 <= qubit < n:
        raise IndexError(f"qubit {qubit} out of range for {n}-qubit state")
    g = np.asarray(g, dtype=np.complex128)
    view = amps.reshape(1 << (n - 1 - qubit), 2, 1 << qubit)
    out = np.einsum("ij,ajb->aib", g, view).reshape(-1)
    if stats is not None:
        stats.single_qubit_gate_applications += 1
        stats.amplitude_operations += amps.size
    return wrap(out)


def apply_cnot(state, control: int, target: int, stats: CircuitStats | None = None):
    amps, wrap = _unpack(state)
    n = _n_qubits(amps)
    if control == target:
        raise ValueError("control and target must differ")
    for q in (control, target):
        if not 0 <= q < n:
            raise IndexError(f"qubit {q} out of range for {n}-qubit state")
    idx = np.arange(amps.size)
    flipped = np.where((idx >> control) & 1, idx ^ (1 << target), idx)
    out = amps[flipped]
    if stats is not None:
        stats.two_qubit_gate_applications += 1
        stats.amplitude_operations += amps.size
    return wrap(out)


@dataclass(frozen=True)
class PermutationGate:
    forward: np.ndarray
    inverse: np.ndarray

    @classmethod
    def from_forward(cls, forward) -> "PermutationGate":
        forward = np.asarray(forward, dtype=np.int64)
        if np.sort(forward).tolist() != list(range(forward.size)):
            raise NotAPermutationError("forward map is not a bijection")
        inverse = np.empty_like(forward)
        inverse[forward] = np.arange(forward.size)
        return cls(forward, inverse)

    @property
    def size(self) -> int:
        return int(self.forward.size)

    def inverted(self) -> "PermutationGate":
        return PermutationGate(self.inverse, self.forward)


def mod_mult_perm(x: int, n: int, ell: int) -> PermutationGate:
    """``y -> x*y mod n`` on ``[0, n)``, identity on the padding ``[n, 2**ell)``."""
    if n >= (1 << ell):
        raise ValueError(f"n={n} does not fit in {ell} qubits")
    if gcd(x, n) != 1:
        raise NotAPermutationError(f"gcd({x}, {n}) = {gcd(x, n)}; multiplication is not invertible")
    forward = np.arange(1 << ell, dtype=np.int64)
    forward[:n] = (forward[:n] * (x % n)) % n
    inverse = np.empty_like(forward)
    inverse[forward] = np.arange(forward.size)
    return PermutationGate(forward, inverse)


def apply_controlled_permutation(state: StateVector, control: int, p: PermutationGate,
                                 stats: CircuitStats | None = None) -> StateVector:
    """Permute register 2 wherever register-1 bit ``control`` is set.

    The amplitude at ``|a>|y>`` moves to ``|a>|p(y)>`` for those ``a``.
    """
    layout = state.layout
    if p.size != layout.dim2:
        raise ValueError(f"permutation acts on {p.size} states, register 2 has {layout.dim2}")
    if not 0 <= control < layout.t:
        raise IndexError(f"control {control} is not a register-1 qubit (t={layout.t})")
    grid = state.grid()
    # (a >> control) & 1 laid out as blocks of 2**control rows
    blocks = grid.reshape(layout.q >> (control + 1), 2, 1 << control, layout.dim2)
    out = blocks.copy()
    out[:, 1] = blocks[:, 1][..., p.inverse]
    if stats is not None:
        stats.controlled_stage_applications += 1
        stats.amplitude_operations += layout.dim // 2
    return StateVector(layout, out.reshape(-1))
