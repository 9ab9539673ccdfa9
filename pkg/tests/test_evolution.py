"""Schedule-evolution tests.

The propagator is compared against an independent reference built from
scipy.linalg.expm products on a much finer grid.
"""

import numpy as np
import pytest
from scipy.linalg import expm

from moqa import (
    DiagonalHamiltonian,
    Linearization,
    NormalizationError,
    build_final,
    build_initial,
    evolve,
    initial_ground_state,
    measure,
    write_histogram_csv,
)
from moqa.evolution import HISTOGRAM_CSV_HEADER

from conftest import make_instance, random_instance


def reference_evolution(h0, hw, total_time, slices):
    """Midpoint product of dense matrix exponentials, built independently."""
    dim = h0.dim
    psi = np.full(dim, dim**-0.5, dtype=np.complex128)
    dt = total_time / slices
    a, b = h0.dense(), np.diag(hw.diagonal)
    for k in range(slices):
        s = (k + 0.5) / slices
        psi = expm(-1j * dt * ((1.0 - s) * a + s * b)) @ psi
    return psi


@pytest.fixture
def system(rng):
    inst = random_instance(rng, 2, 2)
    h0 = build_initial(2)
    hw = build_final(inst, Linearization.pair(0.6))
    return h0, hw


def test_initial_ground_state_uniform():
    psi = initial_ground_state(3)
    assert psi.dtype == np.complex128
    assert np.allclose(psi, 2.0**-1.5)
    assert abs(np.linalg.norm(psi) - 1.0) <= 1e-15


def test_zero_time_echo(system):
    h0, hw = system
    res = evolve(h0, hw, 0.0, steps=16)
    assert np.array_equal(res.final_state, initial_ground_state(2))
    assert res.norm_drift == 0.0


def test_evolution_matches_expm_reference(system):
    h0, hw = system
    t = 30.0
    res = evolve(h0, hw, t, steps=512)
    ref = reference_evolution(h0, hw, t, 5120)
    err = np.linalg.norm(res.final_state - ref)
    assert err <= 1e-3


def test_evolution_second_order_convergence(system):
    h0, hw = system
    t = 30.0
    ref = reference_evolution(h0, hw, t, 8192)
    err_coarse = np.linalg.norm(evolve(h0, hw, t, steps=256).final_state - ref)
    err_fine = np.linalg.norm(evolve(h0, hw, t, steps=512).final_state - ref)
    assert err_fine <= 0.35 * err_coarse


def test_evolution_unitary_drift(system):
    h0, hw = system
    res = evolve(h0, hw, 50.0, steps=2048)
    assert res.norm_drift <= 1e-10
    assert abs(np.linalg.norm(res.final_state) - 1.0) <= 1e-10


def test_evolution_result_fields(system):
    h0, hw = system
    res = evolve(h0, hw, 10.0, steps=64)
    assert res.steps == 64
    assert res.total_time == 10.0
    assert res.target_index == int(np.argmin(hw.diagonal))
    assert 0.0 <= res.ground_fidelity <= 1.0
    assert not res.degenerate_target
    assert res.distribution.shape == (4,)
    assert abs(res.distribution.sum() - 1.0) <= 1e-9


def test_fidelity_is_target_probability(system):
    h0, hw = system
    res = evolve(h0, hw, 25.0, steps=256)
    expected = abs(res.final_state[res.target_index]) ** 2
    assert abs(res.ground_fidelity - expected) <= 1e-12


def test_degenerate_target_flagged():
    h0 = build_initial(1)
    hw = DiagonalHamiltonian(np.array([2.0, 2.0]))
    with pytest.warns(UserWarning):
        res = evolve(h0, hw, 1.0, steps=8)
    assert res.degenerate_target


def test_commuting_problem_warns():
    h0 = build_initial(2)
    hw = DiagonalHamiltonian(np.full(4, 1.5))
    with pytest.warns(UserWarning):
        evolve(h0, hw, 1.0, steps=4)


def test_custom_initial_state(system):
    h0, hw = system
    psi0 = np.zeros(4, dtype=np.complex128)
    psi0[0] = 1.0
    res = evolve(h0, hw, 0.0, steps=4, psi0=psi0)
    assert np.array_equal(res.final_state, psi0)


def test_rejects_unnormalized_initial_state(system):
    h0, hw = system
    with pytest.raises(NormalizationError):
        evolve(h0, hw, 1.0, steps=4, psi0=np.array([1.0, 1.0, 0.0, 0.0]))


def test_slow_evolution_reaches_ground_state():
    # a gentle 2-bit landscape evolved slowly should settle on the minimum
    inst = make_instance([[0.0, 0.4], [1.0, 1.2], [2.0, 0.9], [2.5, 2.5]])
    hw = build_final(inst, Linearization.pair(0.5))
    h0 = build_initial(2)
    res = evolve(h0, hw, 300.0, steps=4096)
    assert res.ground_fidelity >= 0.9


def test_result_dict_serializable(system):
    import json

    h0, hw = system
    res = evolve(h0, hw, 5.0, steps=32)
    payload = res.to_dict()
    json.dumps(payload)
    assert payload["steps"] == 32


# ---------------------------------------------------------------------------
# measurement


def test_measure_seeded_determinism():
    state = initial_ground_state(3)  # uniform: every outcome equally likely
    a = measure(state, 500, seed=42)
    b = measure(state, 500, seed=42)
    c = measure(state, 500, seed=43)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_measure_counts_sum_to_shots(system):
    h0, hw = system
    res = evolve(h0, hw, 20.0, steps=128)
    counts = measure(res.final_state, 337, seed=0)
    assert counts.sum() == 337
    assert counts.shape == (4,)
    assert np.all(counts >= 0)


def test_measure_tracks_probabilities():
    state = np.array([np.sqrt(0.9), 0.0, 0.0, np.sqrt(0.1)], dtype=np.complex128)
    counts = measure(state, 20000, seed=7)
    freq = counts / counts.sum()
    assert abs(freq[0] - 0.9) <= 0.02
    assert counts[1] == 0 and counts[2] == 0


def test_histogram_csv_format(tmp_path):
    counts = np.array([2, 0, 1, 1], dtype=np.int64)
    path = tmp_path / "hist.csv"
    write_histogram_csv(counts, path)
    lines = path.read_text().splitlines()
    assert lines[0] == HISTOGRAM_CSV_HEADER == "x,count,probability"
    assert lines[1] == "0,2,0.5"
    assert lines[2] == "1,0,0.0"
    assert len(lines) == 5
