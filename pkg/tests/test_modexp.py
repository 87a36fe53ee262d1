import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from shorsim.modexp import (apply_stages, claim_audit, modexp_circuit, modexp_oracle, modpow,
                            order_bruteforce, precompute_squares)
from shorsim.state import RegisterLayout, StateVector, max_deviation


def test_modpow_examples():
    assert 7 ** 3 == 22 * 15 + 13
    assert modpow(7, 3, 15) == 13
    assert modpow(11, 2, 15) == 1
    for x, n in [(3, 7), (0, 5), (12, 13)]:
        assert modpow(x, 0, n) == 1


def test_modpow_against_builtin():
    for n in range(2, 60):
        for x in range(0, n):
            for e in range(0, 40):
                assert modpow(x, e, n) == pow(x, e, n)


def test_modpow_errors():
    with pytest.raises(ValueError):
        modpow(2, 3, 1)
    with pytest.raises(ValueError):
        modpow(2, -1, 5)


@pytest.mark.parametrize("x,n,r", [(7, 15, 4), (11, 15, 2), (4, 15, 2), (2, 21, 6), (1, 9, 1)])
def test_order_examples(x, n, r):
    assert order_bruteforce(x, n) == r


def test_order_requires_coprime():
    with pytest.raises(ValueError):
        order_bruteforce(3, 15)


def test_square_tables():
    assert precompute_squares(7, 15, 8).entries == (7, 4, 1, 1, 1, 1, 1, 1)
    assert precompute_squares(11, 15, 3).entries == (11, 1, 1)
    assert set(precompute_squares(1, 33, 6).entries) == {1}


def test_square_table_reconstructs_powers():
    for n, x in [(15, 7), (21, 2), (35, 3), (63, 5)]:
        t = 12
        table = precompute_squares(x, n, t)
        for i in range(t - 1):
            assert table.entries[i + 1] == table.entries[i] ** 2 % n
        for a in range(1 << t):
            prod = 1
            for i in range(t):
                if (a >> i) & 1:
                    prod = prod * table.entries[i] % n
            assert prod == modpow(x, a, n)


def test_circuit_small_case():
    layout = RegisterLayout(3, 4)
    state, stats = modexp_circuit(layout, 7, 15)
    expected = np.zeros(layout.dim, complex)
    for a, y in enumerate([1, 7, 4, 13, 1, 7, 4, 13]):
        expected[a * 16 + y] = 1 / np.sqrt(8)
    assert np.max(np.abs(state.amps - expected)) < 1e-12
    assert stats.controlled_stage_applications == 3


def test_circuit_t8_matches_oracle_with_t_stages():
    layout = RegisterLayout(8, 4)
    state, stats = modexp_circuit(layout, 7, 15)
    assert max_deviation(state, modexp_oracle(layout, 7, 15)) < 1e-10
    assert stats.controlled_stage_applications == 8


def test_base_one_is_unentangled():
    layout = RegisterLayout(5, 4)
    state, _ = modexp_circuit(layout, 1, 15)
    grid = state.grid()
    np.testing.assert_allclose(grid[:, 1], 1 / np.sqrt(32), atol=1e-15)
    assert np.allclose(np.delete(grid, 1, axis=1), 0)
    assert state.allclose(modexp_oracle(layout, 1, 15))


def test_oracle_has_q_equal_amplitudes():
    for n, x, t in [(15, 7, 4), (21, 5, 6), (33, 2, 5)]:
        layout = RegisterLayout(t, n.bit_length())
        amps = modexp_oracle(layout, x, n).amps
        nz = amps[np.abs(amps) > 0]
        assert nz.size == layout.q
        np.testing.assert_allclose(nz, 1 / np.sqrt(layout.q))


def test_register_too_narrow():
    with pytest.raises(ValueError):
        modexp_circuit(RegisterLayout(3, 3), 7, 15)


def test_claim_audit_examples():
    rep = claim_audit(RegisterLayout(8, 4), 7, 15)
    assert (rep.t, rep.claimed_invocations, rep.equal) == (8, 255, True)
    assert rep.claimed_total_invocations == sum(range(256))
    assert rep.max_amplitude_deviation < 1e-10
    assert rep.linearity_ok and rep.linearity_subsets >= 20

    rep = claim_audit(RegisterLayout(2, 2), 2, 3)
    assert (rep.t, rep.claimed_invocations, rep.equal) == (2, 3, True)


def test_singleton_subsets_reduce_to_pure_states():
    layout = RegisterLayout(4, 4)
    for a in range(16):
        amps = np.zeros(layout.dim, complex)
        amps[layout.index(a, 1)] = 1
        out = apply_stages(StateVector(layout, amps), 7, 15)
        assert np.flatnonzero(out.amps).tolist() == [layout.index(a, pow(7, a, 15))]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(15, 7), (15, 2), (21, 5), (35, 3), (33, 10)]), st.integers(1, 7),
       st.integers(0, 2**32 - 1))
def test_subset_linearity(nx, t, seed):
    n, x = nx
    rng = np.random.default_rng(seed)
    layout = RegisterLayout(t, n.bit_length())
    subset = rng.choice(layout.q, size=int(rng.integers(1, layout.q + 1)), replace=False)
    before = np.zeros(layout.dim, complex)
    expected = np.zeros(layout.dim, complex)
    for a in subset:
        before[layout.index(a, 1)] = 1
        expected[layout.index(a, pow(x, int(a), n))] = 1
    norm = np.sqrt(len(subset))
    out = apply_stages(StateVector(layout, before / norm), x, n)
    assert np.max(np.abs(out.amps - expected / norm)) < 1e-10


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([9, 15, 21, 25, 27, 33]), st.integers(1, 60), st.integers(1, 9))
def test_stage_count_law(n, x, t):
    x = x % n
    if np.gcd(x, n) != 1:
        x = 1
    _, stats = modexp_circuit(RegisterLayout(t, n.bit_length()), x, n)
    assert stats.controlled_stage_applications == t
