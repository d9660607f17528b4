"""Tests for the analytic density approximations.

Independent oracles: scipy.integrate.quad for all phi-integrals (the package
uses its own Gauss-Legendre ladder), closed forms at beta = 0, and structural
properties (symmetry, monotonicity, stretched-exponential doubling) that do
not reuse the implementation's arithmetic.
"""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.integrate import quad

from ising_density.analytic import (
    gaussian_density_tfim,
    gaussian_density_two_fields,
    ground_state_energy_per_spin,
    rescaled_energy,
    saddle_density,
    solve_saddle,
    tail_density_critical,
)
from ising_density.errors import (
    AtOrBelowGroundState,
    NegativeDensityWarning,
    OutOfSupport,
)
from ising_density.model import IsingParams


def quad_rhs(beta: float, lam: float) -> float:
    """Saddle equation right-hand side via scipy quadrature (oracle)."""

    def integrand(phi: float) -> float:
        g = math.sqrt(1 - 2 * lam * math.cos(phi) + lam * lam)
        return -math.tanh(beta * g) * g / (2 * math.pi)

    lo, _ = quad(integrand, 0, math.pi, epsabs=1e-13, epsrel=1e-13, limit=200)
    hi, _ = quad(integrand, math.pi, 2 * math.pi, epsabs=1e-13, epsrel=1e-13, limit=200)
    return lo + hi


def test_ground_state_energy_per_spin_values() -> None:
    assert ground_state_energy_per_spin(0.0) == pytest.approx(-1.0, abs=1e-12)
    assert ground_state_energy_per_spin(1.0) == pytest.approx(-4 / math.pi, rel=1e-12)
    # Large-field expansion: e_gs = -lambda - 1/(4 lambda) + O(lambda^-3).
    assert ground_state_energy_per_spin(10.0) == pytest.approx(-10.025, abs=1e-3)
    assert ground_state_energy_per_spin(-0.8) == pytest.approx(
        ground_state_energy_per_spin(0.8), rel=1e-12
    )


def test_ground_state_energy_against_scipy() -> None:
    for lam in (0.3, 0.7, 1.0, 1.5, 5.0):
        def integrand(phi: float) -> float:
            return -math.sqrt(1 - 2 * lam * math.cos(phi) + lam * lam) / (2 * math.pi)

        expected = quad(integrand, 0, math.pi, limit=200)[0] + quad(
            integrand, math.pi, 2 * math.pi, limit=200
        )[0]
        assert ground_state_energy_per_spin(lam) == pytest.approx(expected, abs=1e-11)


def test_solve_saddle_at_zero_energy() -> None:
    sol = solve_saddle(0.0, 1.0, N=16)
    assert abs(sol.beta_sp) <= 1e-10
    assert abs(sol.entropy) <= 1e-12
    # At beta = 0 the prefactor integral is 2 pi (1 + lambda^2).
    assert sol.prefactor == pytest.approx(math.sqrt(16 / (4 * math.pi)), rel=1e-9)


@pytest.mark.parametrize("lam", [0.5, 1.0, 2.0])
def test_solve_saddle_residual_on_grid(lam: float) -> None:
    e_gs = ground_state_energy_per_spin(lam)
    grid = np.linspace(0.995 * e_gs, -0.995 * e_gs, 100)
    betas = []
    for e in grid:
        sol = solve_saddle(float(e), lam)
        assert abs(quad_rhs(sol.beta_sp, lam) - e) <= 1e-10
        assert sol.entropy <= 1e-12
        betas.append(sol.beta_sp)
        if e != 0.0:
            assert sol.beta_sp * e < 0.0
    assert all(b1 > b2 for b1, b2 in zip(betas, betas[1:]))


def test_solve_saddle_out_of_support() -> None:
    e_gs = ground_state_energy_per_spin(1.0)
    for e in (e_gs, -e_gs, 1.5 * e_gs, 2.0):
        with pytest.raises(OutOfSupport):
            solve_saddle(e, 1.0)


def test_saddle_density_peak_matches_gaussian_closed_form() -> None:
    params = IsingParams.tfim(16, 1.0)
    peak = saddle_density(0.0, params)
    assert peak == pytest.approx(math.sqrt(16 / (4 * math.pi)), rel=1e-9)
    assert peak == pytest.approx(gaussian_density_tfim(0.0, params), rel=1e-9)


def test_saddle_density_symmetric() -> None:
    params = IsingParams.tfim(20, 0.7)
    for e in (0.1, 0.35, 0.6):
        assert saddle_density(e, params) == pytest.approx(
            saddle_density(-e, params), rel=1e-10
        )


@pytest.mark.parametrize("lam", [0.5, 1.0, 2.0])
def test_saddle_density_unit_integral(lam: float) -> None:
    # The Laplace normalization carries an O(1/N) defect (~0.34/N), so the
    # 0.005 budget needs N >= ~70; N=150 leaves a comfortable margin.
    params = IsingParams.tfim(150, lam)
    e_gs = ground_state_energy_per_spin(lam)
    grid = np.linspace(0.999 * e_gs, -0.999 * e_gs, 801)
    values = np.array([saddle_density(float(e), params) for e in grid])
    assert np.trapezoid(values, grid) == pytest.approx(1.0, abs=0.005)


def test_gaussian_density_tfim_values() -> None:
    assert gaussian_density_tfim(0.0, IsingParams.tfim(16, 1.0)) == pytest.approx(
        1.1283791670955126, rel=1e-12
    )
    assert gaussian_density_tfim(0.0, IsingParams.tfim(8, 0.0)) == pytest.approx(
        math.sqrt(8 / (2 * math.pi)), rel=1e-12
    )
    params = IsingParams.tfim(12, 0.6)
    e = np.linspace(-3, 3, 2001)
    rho = gaussian_density_tfim(e, params)
    assert np.trapezoid(rho, e) == pytest.approx(1.0, abs=1e-6)


def test_two_field_density_at_correction_zeros() -> None:
    params = IsingParams.two_field(16, 1.0, 1.0)
    scale = math.sqrt(16 * 3.0)
    expected = math.exp(-1.5) / math.sqrt(2 * math.pi)
    for sign in (+1, -1):
        E = sign * math.sqrt(3) * scale
        assert gaussian_density_two_fields(E, params) == pytest.approx(
            expected, rel=1e-12
        )


def test_two_field_density_alpha_zero_is_gaussian() -> None:
    params = IsingParams.two_field(10, 0.8, 0.0)
    for eps in (-2.0, -0.5, 0.0, 1.0, 3.0):
        E = eps * math.sqrt(10 * (1 + 0.64))
        assert gaussian_density_two_fields(E, params) == pytest.approx(
            math.exp(-(eps**2) / 2) / math.sqrt(2 * math.pi), rel=1e-12
        )


@pytest.mark.filterwarnings("ignore::ising_density.errors.NegativeDensityWarning")
def test_two_field_correction_integrates_to_zero() -> None:
    params = IsingParams.two_field(12, 0.5, 1.5)
    plain = IsingParams.two_field(12, 0.5, 0.0)
    s_corr = math.sqrt(12 * (1 + 0.25 + 2.25))
    s_plain = math.sqrt(12 * 1.25)
    eps = np.linspace(-8, 8, 40001)
    corrected = np.array(
        [gaussian_density_two_fields(float(x) * s_corr, params) for x in eps]
    )
    gaussian = np.array(
        [gaussian_density_two_fields(float(x) * s_plain, plain) for x in eps]
    )
    assert abs(np.trapezoid(corrected - gaussian, eps)) <= 1e-6


def test_two_field_density_negative_warns() -> None:
    params = IsingParams.two_field(4, 0.0, 2.0)
    E = 3.0 * math.sqrt(4 * 5.0)
    with pytest.warns(NegativeDensityWarning):
        value = gaussian_density_two_fields(E, params)
    assert value < 0.0
    with pytest.warns(NegativeDensityWarning):
        clamped = gaussian_density_two_fields(E, params, clamp=True)
    assert clamped == 0.0


def test_rescaled_energy() -> None:
    params = IsingParams.two_field(16, 1.0, 1.0)
    assert rescaled_energy(math.sqrt(48.0), params) == pytest.approx(1.0, rel=1e-12)


def test_tail_density_critical_closed_form() -> None:
    N = 16
    E_gs = N * ground_state_energy_per_spin(1.0)
    x = 1.0
    expected = (
        2.0**-N
        * x**-0.75
        / math.sqrt(8 * math.sqrt(6 * math.pi) * N)
        * math.exp(math.sqrt(math.pi * N * x / 6))
    )
    assert tail_density_critical(E_gs + x, N) == pytest.approx(expected, rel=1e-12)


def test_tail_density_critical_stretched_exponential_doubling() -> None:
    """log of (rho corrected for its algebraic prefactor) scales as sqrt(E - E_gs)."""
    N = 12
    E_gs = N * ground_state_energy_per_spin(1.0)

    def exponent(x: float) -> float:
        rho = tail_density_critical(E_gs + x, N)
        return (
            math.log(rho)
            + N * math.log(2)
            + 0.5 * math.log(8 * math.sqrt(6 * math.pi) * N)
            + 0.75 * math.log(x)
        )

    assert exponent(2.0) == pytest.approx(math.sqrt(2) * exponent(1.0), rel=1e-9)


def test_tail_density_critical_rejects_at_or_below_ground_state() -> None:
    N = 10
    E_gs = N * ground_state_energy_per_spin(1.0)
    for E in (E_gs, E_gs - 0.5):
        with pytest.raises(AtOrBelowGroundState):
            tail_density_critical(E, N)
