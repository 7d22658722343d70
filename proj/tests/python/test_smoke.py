import math

import numpy as np
import pytest

import gammaecho as ge


def test_coherent_state_and_stats():
    psi = ge.coherent_state(2.0, 40)
    assert psi.n_max == 40
    amps = psi.amplitudes
    assert amps.shape == (41,)
    assert abs(np.vdot(amps, amps) - 1.0) < 1e-12
    stats = ge.number_stats(ge.to_density(psi))
    assert abs(stats.hs - 7.0) < 1e-9


def test_revival_and_oracle():
    psi = ge.coherent_state(2.0, ge.default_cutoff(2.0))
    assert abs(ge.echo_pure(psi, 1.0, 1.0, 1.0, 2.0 * math.pi) - 1.0) < 1e-9
    phase = ge.phase_state(6, 8)
    assert abs(ge.asymptotic_mean_oracle(phase, 1.7, 1.0) - 1.0 / 7.0) < 1e-12


def test_echo_series_arrays():
    psi = ge.phase_state(4, 6)
    series = ge.echo_series(psi, 1.7, 1.0, 1.0, 5.0, 0.5)
    assert series.times.shape == (10,)
    assert np.all(series.values <= 1.0 + 1e-12)
    assert np.all(series.values >= -1e-12)
    np.testing.assert_allclose(series.cum_mean[-1], series.values.mean(), atol=1e-12)


def test_evolution_preserves_diagonal():
    rho = ge.to_density(ge.coherent_state(1.5, 30))
    params = ge.GammaParams()
    params.gamma = 1.3
    out = ge.evolve(rho, params, 2.0)
    np.testing.assert_allclose(np.diag(out.entries), np.diag(rho.entries))


def test_wigner_and_roughness():
    rho = ge.to_density(ge.coherent_state(1.0, 30))
    grid = ge.grid_auto(rho, 101)
    field = ge.wigner(rho.entries, grid)
    assert field.values.shape == (101, 101)
    assert abs(field.integral() - 1.0) < 1e-5
    r = ge.roughness(rho, grid)
    assert abs(r - 1.0 / math.sqrt(6.0)) < 2e-3


def test_overlap_components():
    rho = ge.to_density(ge.coherent_state(1.5, 30))
    grid = ge.grid_auto(rho, 75)
    total, diag, nondiag = ge.wigner_overlap_components(rho, 1.7, 1.0, 1.0, 3.0, grid)
    np.testing.assert_allclose(
        total.values, diag.values + nondiag.values, atol=1e-12)


def test_errors_are_raised():
    with pytest.raises(ValueError):
        ge.coherent_state(2.0, 10)  # truncation too small
    with pytest.raises(ValueError):
        ge.phase_state(7, 6)


def test_fit_saturation():
    mu0 = 0.91
    sigma = [1.0, 2.0, 3.0]
    mean = [mu0 / (math.pi * s) for s in sigma]
    assert abs(ge.fit_saturation(sigma, mean) - mu0) < 1e-12
