"""Tests for empirical density curves and curve comparison."""

from __future__ import annotations

import io
import math

import numpy as np
import pytest

from ising_density.curves import (
    ComparisonReport,
    DensityCurve,
    compare,
    histogram,
    kernel_density,
    read_curve_csv,
    resample,
    write_curve_csv,
)
from ising_density.errors import DisjointSupports, EmptySpectrum, InvalidArgs
from ising_density.model import IsingParams, ManyBodySpectrum, exact_spectrum


def make_spectrum(values: list[float], N: int = 2) -> ManyBodySpectrum:
    return ManyBodySpectrum(
        np.asarray(values, dtype=float), "dense", IsingParams.tfim(N, 1.0)
    )


def test_histogram_explicit_range_example() -> None:
    spec = make_spectrum([0.0, 0.0, 1.0, 1.0])
    curve = histogram(spec, bins=2, range=(0.0, 1.0))
    np.testing.assert_allclose(curve.grid, [0.25, 0.75])
    np.testing.assert_allclose(curve.values, [1.0, 1.0])


def test_histogram_default_range_is_padded_and_unit_trapezoid() -> None:
    spec = exact_spectrum(IsingParams.tfim(8, 1.0))
    curve = histogram(spec, bins=50)
    assert len(curve.grid) == 52
    assert curve.values[0] == 0.0 and curve.values[-1] == 0.0
    assert curve.integral() == pytest.approx(1.0, abs=1e-12)
    assert curve.grid[1] > spec.energies.min() > curve.grid[0]
    assert curve.grid[-2] < spec.energies.max() < curve.grid[-1]


def test_histogram_default_bin_count() -> None:
    spec = exact_spectrum(IsingParams.tfim(8, 0.7))
    curve = histogram(spec)
    # ceil(sqrt(256)) = 16 interior bins plus two pads.
    assert len(curve.grid) == 18


def test_histogram_symmetric_for_tfim() -> None:
    spec = exact_spectrum(IsingParams.tfim(10, 1.0))
    # Odd bin count keeps the (degenerate) E = 0 level at a bin center
    # rather than on a half-open bin edge.
    curve = histogram(spec, bins=101)
    width = curve.grid[1] - curve.grid[0]
    tolerance = 2.0 / (len(spec.energies) * width)
    np.testing.assert_allclose(curve.values, curve.values[::-1], atol=tolerance)


def test_histogram_degenerate_spectrum() -> None:
    spec = make_spectrum([1.5, 1.5, 1.5])
    curve = histogram(spec, bins=4)
    assert curve.integral() == pytest.approx(1.0, abs=1e-12)
    assert curve.grid[np.argmax(curve.values)] == pytest.approx(1.5)


def test_histogram_validation() -> None:
    with pytest.raises(EmptySpectrum):
        histogram(make_spectrum([]))
    with pytest.raises(InvalidArgs):
        histogram(make_spectrum([0.0, 1.0]), bins=1)


def test_kernel_density_single_eigenvalue() -> None:
    spec = make_spectrum([0.0])
    sigma = 0.5
    curve = kernel_density(spec, bandwidth=sigma)
    expected = np.exp(-curve.grid**2 / (2 * sigma**2)) / (
        sigma * math.sqrt(2 * math.pi)
    )
    np.testing.assert_allclose(curve.values, expected, rtol=1e-12)
    assert curve.integral() == pytest.approx(1.0, abs=1e-9)


def test_kernel_density_unit_integral() -> None:
    spec = exact_spectrum(IsingParams.tfim(8, 0.5))
    curve = kernel_density(spec, bandwidth=0.1)
    assert curve.integral() == pytest.approx(1.0, abs=1e-9)


def test_kernel_density_validation() -> None:
    with pytest.raises(InvalidArgs):
        kernel_density(make_spectrum([0.0]), bandwidth=0.0)
    with pytest.raises(EmptySpectrum):
        kernel_density(make_spectrum([]), bandwidth=0.1)


def test_density_curve_validation() -> None:
    with pytest.raises(InvalidArgs):
        DensityCurve(np.array([0.0, 1.0, 0.5]), np.array([1.0, 1.0, 1.0]))
    with pytest.raises(InvalidArgs):
        DensityCurve(np.array([0.0, 1.0]), np.array([1.0, -0.5]))
    with pytest.raises(InvalidArgs):
        DensityCurve(np.array([0.0, 1.0]), np.array([1.0, 1.0]), abscissa="bogus")


def test_density_curve_abscissa_conversion() -> None:
    params = IsingParams.two_field(4, 1.0, 1.0)
    grid = np.linspace(-8.0, 8.0, 401)
    values = np.exp(-(grid**2) / 8.0) / math.sqrt(8.0 * math.pi)
    curve = DensityCurve(grid, values, abscissa="E")
    per_spin = curve.with_abscissa("e", params)
    assert per_spin.abscissa == "e"
    np.testing.assert_allclose(per_spin.grid, grid / 4.0)
    assert per_spin.integral() == pytest.approx(curve.integral(), rel=1e-12)
    rescaled = curve.with_abscissa("eps", params)
    scale = math.sqrt(4 * 3.0)
    np.testing.assert_allclose(rescaled.grid, grid / scale)
    assert rescaled.integral() == pytest.approx(curve.integral(), rel=1e-12)
    back = rescaled.with_abscissa("E", params)
    np.testing.assert_allclose(back.grid, grid, atol=1e-12)
    np.testing.assert_allclose(back.values, values, atol=1e-12)


def test_compare_identical_curves() -> None:
    grid = np.linspace(0.0, 1.0, 101)
    values = 1.0 + np.sin(2 * math.pi * grid) ** 2
    curve = DensityCurve(grid, values)
    report = compare(curve, curve)
    assert report.l1 == 0.0
    assert report.sup == 0.0
    assert report.grids_aligned


def test_compare_constant_offset() -> None:
    grid = np.linspace(0.0, 1.0, 201)
    base = np.full_like(grid, 2.0)
    c = 0.25
    report = compare(DensityCurve(grid, base), DensityCurve(grid, base + c))
    assert report.sup == pytest.approx(c, rel=1e-12)
    assert report.l1 == pytest.approx(c * 1.0, rel=1e-12)


def test_compare_disjoint_supports() -> None:
    a = DensityCurve(np.linspace(0.0, 1.0, 11), np.ones(11))
    b = DensityCurve(np.linspace(2.0, 3.0, 11), np.ones(11))
    with pytest.raises(DisjointSupports):
        compare(a, b)


def test_compare_is_symmetric() -> None:
    grid_a = np.linspace(-1.0, 1.0, 301)
    grid_b = np.linspace(-0.8, 1.2, 211)
    a = DensityCurve(grid_a, np.exp(-(grid_a**2)))
    b = DensityCurve(grid_b, np.exp(-((grid_b - 0.1) ** 2)))
    ab = compare(a, b)
    ba = compare(b, a)
    assert ab.l1 == pytest.approx(ba.l1, rel=1e-12)
    assert ab.sup == pytest.approx(ba.sup, rel=1e-12)


def test_compare_matches_shifted_peaks() -> None:
    grid = np.linspace(-10.0, 10.0, 2001)

    def two_bumps(shift: float) -> np.ndarray:
        return np.exp(-((grid - 3 - shift) ** 2)) + np.exp(-((grid + 3 - shift) ** 2))

    report = compare(DensityCurve(grid, two_bumps(0.0)), DensityCurve(grid, two_bumps(0.1)))
    assert len(report.peak_positions) == 2
    for pos_a, pos_b, offset in report.peak_positions:
        assert offset == pytest.approx(0.1, abs=0.02)
        assert abs(pos_b - pos_a) == pytest.approx(offset, abs=1e-12)


def test_compare_prominence_filter_ignores_noise() -> None:
    grid = np.linspace(0.0, 10.0, 1001)
    main = np.exp(-((grid - 5.0) ** 2))
    noisy = main + 1e-4 * np.sin(40 * grid) ** 2
    report = compare(DensityCurve(grid, main), DensityCurve(grid, noisy))
    assert len(report.peak_positions) == 1


def test_resample_mass_preserving_on_refining_grid() -> None:
    spec = exact_spectrum(IsingParams.tfim(8, 1.2))
    curve = histogram(spec, bins=40)
    fine_grid = np.sort(
        np.concatenate([curve.grid, 0.5 * (curve.grid[:-1] + curve.grid[1:])])
    )
    refined = resample(curve, fine_grid)
    assert refined.integral() == pytest.approx(curve.integral(), abs=1e-9)


def test_curve_csv_round_trip() -> None:
    spec = exact_spectrum(IsingParams.tfim(6, 0.8))
    curve = histogram(spec, bins=17)
    buffer = io.StringIO()
    write_curve_csv(curve, buffer, metadata={"model": "tfim", "lambda": 0.8, "N": 6})
    text = buffer.getvalue()
    assert text.startswith("#")
    restored, metadata = read_curve_csv(io.StringIO(text))
    np.testing.assert_array_equal(restored.grid, curve.grid)
    np.testing.assert_array_equal(restored.values, curve.values)
    assert restored.abscissa == curve.abscissa
    assert metadata["model"] == "tfim"
    assert metadata["lambda"] == "0.8"


def test_comparison_report_json_round_trip() -> None:
    grid = np.linspace(0.0, 1.0, 51)
    report = compare(
        DensityCurve(grid, np.ones(51)), DensityCurve(grid, np.ones(51) * 1.5)
    )
    payload = report.to_json_dict()
    rebuilt = ComparisonReport.from_json_dict(payload)
    assert rebuilt.l1 == report.l1
    assert rebuilt.sup == report.sup
    assert rebuilt.grids_aligned == report.grids_aligned
