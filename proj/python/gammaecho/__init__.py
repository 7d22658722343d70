"""Gamma-oscillator Loschmidt echo and phase-space toolkit."""

from gammaecho._core import (
    DensityMatrix,
    EchoSeries,
    GammaParams,
    NumberStats,
    PhaseSpaceGrid,
    PureState,
    asymptotic_mean_oracle,
    asymptotic_stats_oracle,
    cat_state,
    coherent_state,
    default_cutoff,
    echo_general,
    echo_pure,
    echo_series,
    evolve,
    evolve_delta,
    fit_saturation,
    fit_short_time_decay,
    fock_state,
    fundamental_period,
    grid_auto,
    husimi,
    number_stats,
    overlap_operator,
    phase_state,
    pi_mn,
    purity,
    pure_state_from_amplitudes,
    random_pure_state,
    roughness,
    roughness_refined,
    spectrum,
    split_diagonal,
    to_density,
    wigner,
    wigner_overlap_components,
    window_mean,
    window_variance,
)

__all__ = [
    "DensityMatrix",
    "EchoSeries",
    "GammaParams",
    "NumberStats",
    "PhaseSpaceGrid",
    "PureState",
    "asymptotic_mean_oracle",
    "asymptotic_stats_oracle",
    "cat_state",
    "coherent_state",
    "default_cutoff",
    "echo_general",
    "echo_pure",
    "echo_series",
    "evolve",
    "evolve_delta",
    "fit_saturation",
    "fit_short_time_decay",
    "fock_state",
    "fundamental_period",
    "grid_auto",
    "husimi",
    "number_stats",
    "overlap_operator",
    "phase_state",
    "pi_mn",
    "purity",
    "pure_state_from_amplitudes",
    "random_pure_state",
    "roughness",
    "roughness_refined",
    "spectrum",
    "split_diagonal",
    "to_density",
    "wigner",
    "wigner_overlap_components",
    "window_mean",
    "window_variance",
]
