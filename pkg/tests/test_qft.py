import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from shorsim.gates import H
from shorsim.modexp import modexp_circuit
from shorsim.qft import qft_first_register, qft_matrix, radix2_columns
from shorsim.state import FIRST, RegisterLayout, StateVector, marginal_distribution, new_basis_state


def _random_state(rng, layout):
    v = rng.normal(size=layout.dim) + 1j * rng.normal(size=layout.dim)
    return StateVector(layout, v / np.linalg.norm(v))


def test_matrix_small_cases():
    np.testing.assert_allclose(qft_matrix(2), H, atol=1e-15)
    assert abs(qft_matrix(4)[1, 1] - 0.5j) < 1e-15


@pytest.mark.parametrize("q", [2, 4, 8, 16])
def test_matrix_orthonormal(q):
    f = qft_matrix(q)
    assert np.max(np.abs(f.conj().T @ f - np.eye(q))) < 1e-12


def test_matrix_direct_sum_definition():
    q = 8
    f = qft_matrix(q)
    for c in range(q):
        for a in range(q):
            assert abs(f[c, a] - np.exp(2j * np.pi * a * c / q) / np.sqrt(q)) < 1e-14


def test_matrix_size_limit():
    with pytest.raises(ValueError):
        qft_matrix(1 << 13)


def test_zero_input_gives_uniform():
    layout = RegisterLayout(4, 3)
    out = qft_first_register(new_basis_state(layout, 0, 5))
    grid = out.grid()
    np.testing.assert_allclose(grid[:, 5], 0.25, atol=1e-15)
    assert np.allclose(np.delete(grid, 5, axis=1), 0)


@pytest.mark.parametrize("mode", ["fast", "dense"])
def test_inverse_round_trip(mode):
    rng = np.random.default_rng(4)
    state = _random_state(rng, RegisterLayout(6, 3))
    back = qft_first_register(qft_first_register(state, mode), mode, inverse=True)
    assert np.max(np.abs(back.amps - state.amps)) < 1e-10


def test_peaks_after_modexp():
    state, _ = modexp_circuit(RegisterLayout(8, 4), 7, 15)
    p = marginal_distribution(qft_first_register(state), FIRST)
    expected = np.zeros(256)
    expected[[0, 64, 128, 192]] = 0.25
    assert np.max(np.abs(p - expected)) < 1e-12


@pytest.mark.parametrize("t", range(1, 13))
def test_fast_dense_agree(t):
    rng = np.random.default_rng(t)
    state = _random_state(rng, RegisterLayout(t, 2))
    fast = qft_first_register(state, "fast")
    dense = qft_first_register(state, "dense")
    assert np.max(np.abs(fast.amps - dense.amps)) < 1e-10


def test_fast_matches_numpy_inverse_fft():
    # exp(+2 pi i a c / q) / sqrt(q) is numpy's orthonormal inverse DFT
    rng = np.random.default_rng(9)
    g = rng.normal(size=(1024, 5)) + 1j * rng.normal(size=(1024, 5))
    ref = np.fft.ifft(g, axis=0, norm="ortho")
    assert np.max(np.abs(radix2_columns(g) - ref)) < 1e-12


def test_bad_mode():
    with pytest.raises(ValueError):
        qft_first_register(new_basis_state(RegisterLayout(2, 2), 0, 0), "slow")


@pytest.mark.parametrize("t", [1, 3, 6])
def test_shift_phase_duality(t):
    layout = RegisterLayout(t, 2)
    q = layout.q
    phase = np.exp(2j * np.pi * np.arange(q) / q)
    for a in range(q):
        base = qft_first_register(new_basis_state(layout, a, 3)).grid()[:, 3]
        shifted = qft_first_register(new_basis_state(layout, (a + 1) % q, 3)).grid()[:, 3]
        assert np.max(np.abs(shifted - base * phase)) < 1e-12


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 8), st.integers(1, 3), st.integers(0, 2**32 - 1),
       st.sampled_from(["fast", "dense"]))
def test_unitarity(t, ell, seed, mode):
    rng = np.random.default_rng(seed)
    layout = RegisterLayout(t, ell)
    u, v = _random_state(rng, layout), _random_state(rng, layout)
    fu, fv = qft_first_register(u, mode), qft_first_register(v, mode)
    assert abs(fu.norm() - 1) < 1e-10
    assert abs(np.vdot(fu.amps, fv.amps) - np.vdot(u.amps, v.amps)) < 1e-10
