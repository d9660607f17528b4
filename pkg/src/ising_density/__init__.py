"""Exact spectra of the quantum Ising chain and analytic density approximations.

The package covers both the transverse-field ring and its two-field extension
(an added longitudinal field): exact dense and free-fermion spectra, trace
moments, saddle-point / Gaussian / cubic-corrected and tail densities,
block-structure combinatorics, multi-Gaussian peak mixtures with perturbative
corrections, and density-curve utilities behind the ``ising-density`` CLI.
"""

from __future__ import annotations

from .analytic import (
    SaddleSolution,
    gaussian_density_tfim,
    gaussian_density_two_fields,
    ground_state_energy_per_spin,
    rescaled_energy,
    saddle_density,
    saddle_density_extensive,
    solve_saddle,
    tail_density_critical,
)
from .blocks import (
    BlockCensus,
    DegeneracyCensus,
    block_census,
    brute_force_census,
    cells,
    count_N1,
    count_N2,
    count_Na,
    count_Nb,
    count_Nc,
    degeneracy_census,
    f_count,
    k_bar,
)
from .curves import (
    ComparisonReport,
    DensityCurve,
    compare,
    curve_peaks,
    histogram,
    kernel_density,
    read_curve_csv,
    write_curve_csv,
)
from .errors import (
    AlphaSingular,
    AtOrBelowGroundState,
    CapExceeded,
    DisjointSupports,
    EigensolverFailure,
    EmptySpectrum,
    InvalidArgs,
    InvalidRegime,
    IsingError,
    NegativeDensityWarning,
    NoConvergence,
    OddN,
    OutOfSupport,
    UnknownClass,
)
from .fermion import enumerate_spectrum, momentum_grid, one_particle_energy
from .model import (
    IsingParams,
    ManyBodySpectrum,
    MomentSet,
    analytic_moments,
    build_hamiltonian,
    exact_spectrum,
    numeric_moments,
)
from .peaks import (
    GaussianMixture,
    MixtureComponent,
    Visibility,
    XXProjectionReport,
    generic_alpha_components,
    generic_alpha_mixture,
    mean_one_particle_energy,
    small_lambda_ER,
    small_lambda_components,
    small_lambda_deltaE,
    small_lambda_deltaE_R,
    small_lambda_mixture_integer_alpha,
    small_lambda_sigmaR,
    strong_field_components,
    strong_field_mixture,
    strong_field_moments,
    tfim_fixed_n_moments,
    tfim_mixture_components,
    tfim_multi_gaussian,
    visibility_Nmax,
    xx_projection_check,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaSingular",
    "AtOrBelowGroundState",
    "BlockCensus",
    "CapExceeded",
    "ComparisonReport",
    "DegeneracyCensus",
    "DensityCurve",
    "DisjointSupports",
    "EigensolverFailure",
    "EmptySpectrum",
    "GaussianMixture",
    "InvalidArgs",
    "InvalidRegime",
    "IsingError",
    "IsingParams",
    "ManyBodySpectrum",
    "MixtureComponent",
    "MomentSet",
    "NegativeDensityWarning",
    "NoConvergence",
    "OddN",
    "OutOfSupport",
    "SaddleSolution",
    "UnknownClass",
    "Visibility",
    "XXProjectionReport",
    "analytic_moments",
    "block_census",
    "brute_force_census",
    "build_hamiltonian",
    "cells",
    "compare",
    "count_N1",
    "count_N2",
    "count_Na",
    "count_Nb",
    "count_Nc",
    "curve_peaks",
    "degeneracy_census",
    "enumerate_spectrum",
    "exact_spectrum",
    "f_count",
    "gaussian_density_tfim",
    "gaussian_density_two_fields",
    "generic_alpha_components",
    "generic_alpha_mixture",
    "ground_state_energy_per_spin",
    "histogram",
    "k_bar",
    "kernel_density",
    "mean_one_particle_energy",
    "momentum_grid",
    "numeric_moments",
    "one_particle_energy",
    "read_curve_csv",
    "rescaled_energy",
    "saddle_density",
    "saddle_density_extensive",
    "small_lambda_ER",
    "small_lambda_components",
    "small_lambda_deltaE",
    "small_lambda_deltaE_R",
    "small_lambda_mixture_integer_alpha",
    "small_lambda_sigmaR",
    "solve_saddle",
    "strong_field_components",
    "strong_field_mixture",
    "strong_field_moments",
    "tail_density_critical",
    "tfim_fixed_n_moments",
    "tfim_mixture_components",
    "tfim_multi_gaussian",
    "visibility_Nmax",
    "write_curve_csv",
    "xx_projection_check",
]
