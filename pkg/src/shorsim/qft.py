"""Fourier transform on register 1.

Kernel ``exp(+2j*pi*a*c/q) / sqrt(q)``.  Register 2 is inert, so each
register-2 column of the ``(q, 2**ell)`` grid is transformed independently.
"""

from __future__ import annotations

import numpy as np

from shorsim.state import StateVector

DENSE_MAX_Q = 1 << 12


def qft_matrix(q: int, inverse: bool = False) -> np.ndarray:
    """Dense ``q x q`` transform; entry ``(c, a)`` is ``exp(2j*pi*a*c/q)/sqrt(q)``."""
    if q < 1 or q > DENSE_MAX_Q:
        raise ValueError(f"dense transform size must be in [1, {DENSE_MAX_Q}], got {q}")
    sign = -1 if inverse else 1
    ac = np.outer(np.arange(q), np.arange(q)) % q
    return np.exp(sign * 2j * np.pi * ac / q) / np.sqrt(q)


def _bit_reversal(t: int) -> np.ndarray:
    idx = np.arange(1 << t)
    rev = np.zeros_like(idx)
    for _ in range(t):
        rev = (rev << 1) | (idx & 1)
        idx >>= 1
    return rev


def radix2_columns(grid: np.ndarray, inverse: bool = False) -> np.ndarray:
    """Unitary DFT down axis 0 of a ``(q, m)`` array, iterative decimation in time."""
    q, m = grid.shape
    t = q.bit_length() - 1
    if (1 << t) != q:
        raise ValueError(f"transform length {q} is not a power of two")
    sign = -1 if inverse else 1
    y = grid[_bit_reversal(t)]
    size = 2
    while size <= q:
        half = size // 2
        twiddle = np.exp(sign * 2j * np.pi * np.arange(half) / size)[None, :, None]
        blocks = y.reshape(q // size, size, m)
        even = blocks[:, :half]
        odd = blocks[:, half:] * twiddle
        y = np.concatenate([even + odd, even - odd], axis=1).reshape(q, m)
        size *= 2
    return y / np.sqrt(q)


def qft_first_register(state: StateVector, mode: str = "fast",
                       inverse: bool = False) -> StateVector:
    grid = state.grid()
    if mode == "fast":
        out = radix2_columns(grid, inverse)
    elif mode == "dense":
        out = qft_matrix(state.layout.q, inverse) @ grid
    else:
        raise ValueError(f"mode must be 'fast' or 'dense', got {mode!r}")
    return StateVector(state.layout, out.reshape(-1))
