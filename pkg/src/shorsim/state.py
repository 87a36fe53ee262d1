"""Dense two-register state vectors.

Basis index of ``|a>|y>`` is ``a * 2**ell + y``: register 1 (the exponent
register, ``t`` qubits) sits in the high-order bits, register 2 (``ell``
qubits) in the low-order bits.  Qubit ``k`` of the full state is bit ``k`` of
the basis index, so register-1 qubit ``i`` is global qubit ``ell + i``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Union

import numpy as np

NORM_TOL = 1e-9
STATE_TOL = 1e-10
DEFAULT_MAX_QUBITS = 26
MAX_QUBITS_ENV = "SHORSIM_MAX_QUBITS"

FIRST = 1
SECOND = 2


class CapacityError(ValueError):
    """Requested layout exceeds the configured qubit budget."""


def max_qubits() -> int:
    """Qubit budget, overridable through ``SHORSIM_MAX_QUBITS``."""
    raw = os.environ.get(MAX_QUBITS_ENV)
    if raw is None:
        return DEFAULT_MAX_QUBITS
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_QUBITS_ENV} must be an integer, got {raw!r}") from None
    if value < 2:
        raise ValueError(f"{MAX_QUBITS_ENV} must be at least 2, got {value}")
    return value


@dataclass(frozen=True)
class RegisterLayout:
    t: int
    ell: int
    limit: int | None = None

    def __post_init__(self):
        if self.t < 1 or self.ell < 1:
            raise ValueError(f"register widths must be >= 1, got t={self.t}, ell={self.ell}")
        limit = max_qubits() if self.limit is None else self.limit
        if self.t + self.ell > limit:
            raise CapacityError(
                f"layout needs {self.t + self.ell} qubits, capacity is {limit}")

    @property
    def q(self) -> int:
        return 1 << self.t

    @property
    def dim2(self) -> int:
        return 1 << self.ell

    @property
    def n_qubits(self) -> int:
        return self.t + self.ell

    @property
    def dim(self) -> int:
        return 1 << (self.t + self.ell)

    def index(self, a: int, y: int) -> int:
        return a * self.dim2 + y

    def decompose(self, index: int) -> tuple[int, int]:
        return divmod(index, self.dim2)


@dataclass
class StateVector:
    layout: RegisterLayout
    amps: np.ndarray

    def __post_init__(self):
        self.amps = np.asarray(self.amps, dtype=np.complex128)
        if self.amps.shape != (self.layout.dim,):
            raise ValueError(
                f"amplitude array has shape {self.amps.shape}, layout needs ({self.layout.dim},)")

    def grid(self) -> np.ndarray:
        """View of the amplitudes as a ``(q, 2**ell)`` array indexed ``[a, y]``."""
        return self.amps.reshape(self.layout.q, self.layout.dim2)

    def norm(self) -> float:
        return float(np.vdot(self.amps, self.amps).real)

    def is_normalized(self, tol: float = NORM_TOL) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def copy(self) -> "StateVector":
        return StateVector(self.layout, self.amps.copy())

    def allclose(self, other: "StateVector", tol: float = STATE_TOL) -> bool:
        return self.layout == other.layout and max_deviation(self, other) < tol


def max_deviation(u: StateVector, v: StateVector) -> float:
    return float(np.max(np.abs(u.amps - v.amps)))


def new_basis_state(layout: RegisterLayout, a: int, y: int) -> StateVector:
    if not 0 <= a < layout.q:
        raise IndexError(f"register-1 value {a} outside [0, {layout.q})")
    if not 0 <= y < layout.dim2:
        raise IndexError(f"register-2 value {y} outside [0, {layout.dim2})")
    amps = np.zeros(layout.dim, dtype=np.complex128)
    amps[layout.index(a, y)] = 1.0
    return StateVector(layout, amps)


def ket(value: int, width: int) -> np.ndarray:
    """Computational basis vector ``|value>`` on ``width`` qubits."""
    if width < 0 or not 0 <= value < (1 << width):
        raise IndexError(f"{value} is not representable on {width} qubits")
    vec = np.zeros(1 << width, dtype=np.complex128)
    vec[value] = 1.0
    return vec


Vectorish = Union[StateVector, np.ndarray]


def _raw(v: Vectorish) -> np.ndarray:
    return v.amps if isinstance(v, StateVector) else np.asarray(v, dtype=np.complex128)


def tensor(u: Vectorish, v: Vectorish) -> np.ndarray:
    """Kronecker product; entry ``i * len(v) + j`` is ``u[i] * v[j]``."""
    return np.kron(_raw(u), _raw(v))


def uniform_first_register(layout: RegisterLayout, y0: int,
                           method: str = "hadamard", stats=None) -> StateVector:
    """Return ``q**-0.5 * sum_a |a>|y0>``.

    ``method="hadamard"`` starts from ``|0>|y0>`` and applies one Hadamard per
    register-1 qubit; ``method="direct"`` writes the amplitudes in place.
    """
    if not 0 <= y0 < layout.dim2:
        raise IndexError(f"register-2 value {y0} outside [0, {layout.dim2})")
    if method == "direct":
        amps = np.zeros(layout.dim, dtype=np.complex128)
        amps[y0::layout.dim2] = 1.0 / np.sqrt(layout.q)
        return StateVector(layout, amps)
    if method != "hadamard":
        raise ValueError(f"unknown method {method!r}")

    from shorsim.gates import H, apply_single_qubit

    state = new_basis_state(layout, 0, y0)
    for i in range(layout.t):
        state = apply_single_qubit(state, H, layout.ell + i, stats)
    return state


def _register_probs(state: StateVector) -> np.ndarray:
    return np.abs(state.grid()) ** 2


def marginal_distribution(state: StateVector, which: int) -> np.ndarray:
    """Born-rule distribution of one register, summed over the other."""
    probs = _register_probs(state)
    if which == FIRST:
        return probs.sum(axis=1)
    if which == SECOND:
        return probs.sum(axis=0)
    raise ValueError(f"register selector must be 1 or 2, got {which!r}")


def _validated(p: np.ndarray) -> np.ndarray:
    total = p.sum()
    if not total > 0 or not np.isfinite(total):
        raise AssertionError("marginal distribution has no mass; state is not normalized")
    return np.clip(p, 0.0, None) / total


def sample_register(state: StateVector, which: int, rng: np.random.Generator,
                    shots: int = 1) -> np.ndarray:
    """Draw ``shots`` independent outcomes without collapsing the state."""
    p = _validated(marginal_distribution(state, which))
    return rng.choice(p.size, size=shots, p=p)


def measure_register(state: StateVector, which: int,
                     rng: np.random.Generator) -> tuple[int, StateVector]:
    """Measure one register and return the outcome with the collapsed state."""
    value = int(sample_register(state, which, rng, shots=1)[0])
    grid = state.grid().copy()
    if which == FIRST:
        keep = np.zeros(grid.shape[0], dtype=bool)
        keep[value] = True
        grid[~keep, :] = 0.0
    else:
        keep = np.zeros(grid.shape[1], dtype=bool)
        keep[value] = True
        grid[:, ~keep] = 0.0
    amps = grid.reshape(-1)
    amps /= np.sqrt(np.vdot(amps, amps).real)
    return value, StateVector(state.layout, amps)
