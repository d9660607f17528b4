"""Command-line front end emitting reproducible CSV/JSON artifacts.

Subcommands mirror the figure-class computations: exact spectra, empirical
densities, analytic and multi-Gaussian approximations, curve comparison,
block/degeneracy censuses, trace moments, and peak-visibility estimates.

Conventions shared by all subcommands:

* every output file carries `# key = value` metadata lines with the full
  physical parameters, and reruns with identical inputs are byte-identical
  (numbers are written in shortest round-trip form, no timestamps);
* usage errors exit with code 2; compute errors exit with code 1 and a
  single JSON object ``{"code": ..., "message": ...}`` on stderr;
* grids are given as ``LO:HI:POINTS`` with inclusive endpoints, interpreted
  in the output abscissa: absolute energy ``E`` by default, per-spin ``e``
  with ``--per-spin``, rescaled ``eps`` with ``--rescaled``.
"""

from __future__ import annotations

import functools
import json
import math
import sys
from typing import Callable

import click
import numpy as np

from .analytic import (
    gaussian_density_tfim,
    gaussian_density_two_fields,
    saddle_density_extensive,
    tail_density_critical,
)
from .blocks import block_census, degeneracy_census
from .curves import (
    ComparisonReport,
    DensityCurve,
    compare,
    histogram,
    kernel_density,
    read_curve_csv,
    write_curve_csv,
)
from .errors import InvalidArgs, IsingError
from .fermion import enumerate_spectrum
from .model import (
    IsingParams,
    ManyBodySpectrum,
    analytic_moments,
    exact_spectrum,
    numeric_moments,
)
from .peaks import (
    GaussianMixture,
    generic_alpha_components,
    small_lambda_components,
    strong_field_components,
    tfim_mixture_components,
    visibility_Nmax,
)

_MULTI_KINDS = ("multi-tfim", "multi-strong", "multi-int-alpha", "multi-generic")
_ANALYTIC_KINDS = ("gaussian", "saddle", "tail")
_DEFAULT_GRID_MAX_POINTS = 200_001


def _compute_errors(fn: Callable) -> Callable:
    """Translate library errors into the exit-1 stderr-JSON convention."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except IsingError as exc:
            click.echo(
                json.dumps({"code": type(exc).__name__, "message": str(exc)}),
                err=True,
            )
            sys.exit(1)

    return wrapper


def _parse_grid(ctx, param, value):
    if value is None:
        return None
    parts = str(value).split(":")
    if len(parts) != 3:
        raise click.BadParameter("expected LO:HI:POINTS")
    try:
        lo, hi, points = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise click.BadParameter("expected numeric LO:HI and integer POINTS")
    if not hi > lo:
        raise click.BadParameter("grid needs HI > LO")
    if points < 2:
        raise click.BadParameter("grid needs at least 2 points")
    return np.linspace(lo, hi, points)


def _build_params(model: str | None, n: int, lam: float, alpha: float) -> IsingParams:
    if model is None:
        model = "tfim" if alpha == 0.0 else "two-field"
    if model == "tfim":
        if alpha != 0.0:
            raise InvalidArgs("--model tfim is incompatible with --alpha != 0")
        return IsingParams.tfim(n, lam)
    return IsingParams.two_field(n, lam, alpha)


def _params_metadata(params: IsingParams) -> dict:
    return {
        "model": params.model,
        "n": params.N,
        "lambda": repr(params.lam),
        "alpha": repr(params.alpha),
    }


# ----------------------------------------------------------------------------
# spectrum CSV format
# ----------------------------------------------------------------------------


def _write_spectrum_csv(spectrum: ManyBodySpectrum, destination: str) -> None:
    meta = _params_metadata(spectrum.params)
    meta["method"] = spectrum.method
    lines = [f"# {key} = {value}" for key, value in meta.items()]
    lines.append("index,energy")
    lines.extend(
        f"{i},{float(energy)!r}" for i, energy in enumerate(spectrum.energies)
    )
    with open(destination, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


def _read_table(path: str) -> tuple[dict, str, list[list[str]]]:
    metadata: dict[str, str] = {}
    header = None
    rows: list[list[str]] = []
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for line in handle:
                stripped = line.strip()
                if not stripped:
                    continue
                if stripped.startswith("#"):
                    key, _, value = stripped.lstrip("#").strip().partition("=")
                    metadata[key.strip()] = value.strip()
                elif header is None:
                    header = stripped
                else:
                    rows.append(stripped.split(","))
    except OSError as exc:
        raise InvalidArgs(f"cannot read {path}: {exc}") from exc
    if header is None:
        raise InvalidArgs(f"{path} contains no table")
    return metadata, header, rows


def _read_spectrum_csv(path: str) -> ManyBodySpectrum:
    metadata, header, rows = _read_table(path)
    if header != "index,energy":
        raise InvalidArgs(f"{path} is not a spectrum CSV (header {header!r})")
    try:
        model = metadata["model"]
        n = int(metadata["n"])
        lam = float(metadata["lambda"])
        alpha = float(metadata.get("alpha", "0.0"))
        method = metadata.get("method", "dense")
        energies = np.array([float(row[1]) for row in rows])
    except (KeyError, ValueError, IndexError) as exc:
        raise InvalidArgs(f"malformed spectrum CSV {path}: {exc}") from exc
    params = (
        IsingParams.tfim(n, lam)
        if model == "tfim"
        else IsingParams.two_field(n, lam, alpha)
    )
    return ManyBodySpectrum(energies=energies, method=method, params=params)


def _sniff_table(path: str) -> str:
    _, header, _ = _read_table(path)
    return "spectrum" if header == "index,energy" else "curve"


# ----------------------------------------------------------------------------
# command group
# ----------------------------------------------------------------------------


@click.group()
def main() -> None:
    """Density-of-states toolkit for transverse- and two-field Ising rings."""


@main.command()
@click.option("--model", type=click.Choice(["tfim", "two-field"]), required=True)
@click.option("--n", "n", type=int, required=True, help="Ring size N.")
@click.option("--lambda", "lam", type=float, required=True, help="Transverse field.")
@click.option("--alpha", type=float, default=0.0, help="Longitudinal field.")
@click.option(
    "--method",
    type=click.Choice(["dense", "fermion"]),
    default="dense",
    show_default=True,
)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@_compute_errors
def spectrum(model, n, lam, alpha, method, out) -> None:
    """Compute a complete many-body spectrum and write an eigenvalue CSV."""
    params = _build_params(model, n, lam, alpha)
    if method == "fermion":
        if params.model != "tfim":
            raise InvalidArgs(
                "the fermion method applies to the transverse-field model only"
            )
        result = enumerate_spectrum(n, lam)
    else:
        result = exact_spectrum(params)
    _write_spectrum_csv(result, out)


@main.command()
@click.option("--in", "source", type=click.Path(dir_okay=False), required=True)
@click.option("--bins", type=int, default=None, help="Histogram bin count.")
@click.option("--kde", "kde_sigma", type=float, default=None, help="Kernel width.")
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@_compute_errors
def density(source, bins, kde_sigma, out) -> None:
    """Turn a spectrum CSV into an empirical density curve CSV."""
    if bins is not None and kde_sigma is not None:
        raise click.UsageError("--bins and --kde are mutually exclusive")
    spec = _read_spectrum_csv(source)
    metadata = _params_metadata(spec.params)
    metadata["method"] = spec.method
    if kde_sigma is not None:
        curve = kernel_density(spec, kde_sigma)
        metadata["kde"] = repr(float(kde_sigma))
    else:
        curve = histogram(spec, bins=bins)
        metadata["bins"] = str(bins) if bins is not None else "default"
    write_curve_csv(curve, out, metadata)


def _abscissa_scale(target: str, params: IsingParams) -> float:
    if target == "E":
        return 1.0
    if target == "e":
        return float(params.N)
    w = 1.0 + params.lam**2 + params.alpha**2
    return math.sqrt(params.N * w)


def _build_mixture(kind: str, params: IsingParams) -> GaussianMixture:
    if kind == "multi-tfim":
        if params.alpha != 0.0:
            raise InvalidArgs("multi-tfim requires alpha = 0")
        return tfim_mixture_components(params.N, params.lam)
    if kind == "multi-strong":
        return strong_field_components(params.N, params.lam, params.alpha)
    if kind == "multi-int-alpha":
        if params.alpha != 1.0:
            raise InvalidArgs(
                "multi-int-alpha is implemented for alpha = 1 "
                f"(got alpha = {params.alpha!r})"
            )
        return small_lambda_components(params.N, params.lam)
    return generic_alpha_components(params.N, params.lam, params.alpha)


def _default_energy_grid(mixture: GaussianMixture) -> np.ndarray:
    """Span all components with margin, spaced to resolve the narrowest peak."""
    mus = [c.mu for c in mixture.components]
    sigmas = [math.sqrt(c.var) for c in mixture.components if c.var > 0.0]
    widest = max(sigmas, default=1.0)
    narrowest = min(sigmas, default=1.0)
    lo = min(mus) - 8.0 * widest - 1.0
    hi = max(mus) + 8.0 * widest + 1.0
    span = hi - lo
    step = min(narrowest / 4.0, span / 2000.0)
    points = min(int(math.ceil(span / step)) + 1, _DEFAULT_GRID_MAX_POINTS)
    return np.linspace(lo, hi, points)


def _analytic_values(kind: str, params: IsingParams, e_grid: np.ndarray) -> np.ndarray:
    if kind == "gaussian":
        if params.model == "tfim":
            return gaussian_density_tfim(e_grid / params.N, params) / params.N
        scale = _abscissa_scale("eps", params)
        return gaussian_density_two_fields(e_grid, params, clamp=True) / scale
    if kind == "saddle":
        return np.array(
            [saddle_density_extensive(float(E), params) for E in e_grid]
        )
    if params.model != "tfim" or params.lam != 1.0:
        raise InvalidArgs("the tail formula is specific to tfim at lambda = 1")
    return np.array([tail_density_critical(float(E), params.N) for E in e_grid])


@main.command()
@click.option(
    "--kind",
    type=click.Choice(list(_ANALYTIC_KINDS) + list(_MULTI_KINDS)),
    required=True,
)
@click.option("--model", type=click.Choice(["tfim", "two-field"]), default=None)
@click.option("--n", "n", type=int, required=True)
@click.option("--lambda", "lam", type=float, required=True)
@click.option("--alpha", type=float, default=0.0)
@click.option("--grid", callback=_parse_grid, default=None, help="LO:HI:POINTS.")
@click.option("--per-spin", is_flag=True, help="Abscissa e = E/N.")
@click.option("--rescaled", is_flag=True, help="Abscissa eps = E/sqrt(N w).")
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@_compute_errors
def approx(kind, model, n, lam, alpha, grid, per_spin, rescaled, out) -> None:
    """Write an analytic or multi-Gaussian density approximation as CSV.

    Multi-* kinds also write the mixture parameters to a
    ``<out>.mixture.json`` sidecar and pick a support-spanning grid when
    ``--grid`` is omitted; the analytic kinds require an explicit grid.
    """
    if per_spin and rescaled:
        raise click.UsageError("--per-spin and --rescaled are mutually exclusive")
    target = "e" if per_spin else ("eps" if rescaled else "E")
    params = _build_params(model, n, lam, alpha)
    metadata = _params_metadata(params)
    metadata["kind"] = kind
    mixture = None
    if kind in _MULTI_KINDS:
        mixture = _build_mixture(kind, params)
        e_grid = (
            _default_energy_grid(mixture)
            if grid is None
            else grid * _abscissa_scale(target, params)
        )
        curve = mixture.density_curve(e_grid)
    else:
        if grid is None:
            raise click.UsageError(f"--grid is required for kind '{kind}'")
        e_grid = grid * _abscissa_scale(target, params)
        values = _analytic_values(kind, params, e_grid)
        curve = DensityCurve(e_grid, values, abscissa="E", norm="unit")
    if target != "E":
        curve = curve.with_abscissa(target, params)
    write_curve_csv(curve, out, metadata)
    if mixture is not None:
        sidecar = (
            out[: -len(".csv")] + ".mixture.json"
            if out.endswith(".csv")
            else out + ".mixture.json"
        )
        payload = {"params": metadata, **mixture.to_json_dict()}
        with open(sidecar, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")


@main.command("compare")
@click.option("--a", "path_a", type=click.Path(dir_okay=False), required=True)
@click.option("--b", "path_b", type=click.Path(dir_okay=False), required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@_compute_errors
def compare_command(path_a, path_b, out) -> None:
    """Compare two spectrum CSVs or two curve CSVs; write a JSON report.

    Spectrum inputs are compared as sorted eigenvalue sequences (l1 = mean
    absolute difference, sup = max); curve inputs are compared as densities
    with peak matching.
    """
    kind_a, kind_b = _sniff_table(path_a), _sniff_table(path_b)
    if kind_a != kind_b:
        raise InvalidArgs(
            f"cannot compare a {kind_a} file with a {kind_b} file"
        )
    if kind_a == "spectrum":
        spec_a = _read_spectrum_csv(path_a)
        spec_b = _read_spectrum_csv(path_b)
        if len(spec_a.energies) != len(spec_b.energies):
            raise InvalidArgs(
                "spectrum comparison needs equal level counts, got "
                f"{len(spec_a.energies)} and {len(spec_b.energies)}"
            )
        diff = np.abs(np.sort(spec_a.energies) - np.sort(spec_b.energies))
        report = ComparisonReport(
            l1=float(np.mean(diff)),
            sup=float(np.max(diff)),
            peak_positions=[],
            grids_aligned=True,
        )
    else:
        curve_a, _ = read_curve_csv(path_a)
        curve_b, _ = read_curve_csv(path_b)
        report = compare(curve_a, curve_b)
    with open(out, "w", encoding="utf-8") as handle:
        json.dump(report.to_json_dict(), handle, indent=2)
        handle.write("\n")


@main.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--alpha", type=str, default=None, help="Rational alpha as P/Q.")
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@_compute_errors
def census(n, alpha, out) -> None:
    """Write the block-count table, or the degeneracy classes at rational alpha."""
    if alpha is None:
        result = block_census(n)
        table = {**result.polarized, **result.table}
        lines = [f"# n = {n}", "n,k,f"]
        lines.extend(
            f"{nn},{kk},{table[(nn, kk)]}" for nn, kk in sorted(table)
        )
    else:
        result = degeneracy_census(n, alpha)
        lines = [f"# n = {n}", f"# alpha = {alpha}", "R,count,energy"]
        lines.extend(
            f"{R},{result.classes[R]},{result.energy_of[R]}"
            for R in sorted(result.classes)
        )
    with open(out, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


@main.command()
@click.option("--model", type=click.Choice(["tfim", "two-field"]), required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--lambda", "lam", type=float, required=True)
@click.option("--alpha", type=float, default=0.0)
@click.option("--max-order", type=click.IntRange(1, 4), default=4, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@_compute_errors
def moments(model, n, lam, alpha, max_order, out) -> None:
    """Tabulate numeric (dense-trace) vs analytic moments up to max order."""
    params = _build_params(model, n, lam, alpha)
    numeric = numeric_moments(exact_spectrum(params), max_order=max_order)
    analytic = analytic_moments(params)
    metadata = _params_metadata(params)
    lines = [f"# {key} = {value}" for key, value in metadata.items()]
    lines.append("order,numeric,analytic")
    for order in range(1, max_order + 1):
        numeric_m = getattr(numeric, f"m{order}")
        analytic_m = getattr(analytic, f"m{order}")
        numeric_text = "" if numeric_m is None else repr(float(numeric_m))
        analytic_text = "" if analytic_m is None else repr(float(analytic_m))
        lines.append(f"{order},{numeric_text},{analytic_text}")
    with open(out, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


@main.command()
@click.option("--regime", type=str, required=True)
@click.option("--lambda", "lam", type=float, required=True)
@click.option("--alpha", type=float, default=0.0)
@_compute_errors
def visibility(regime, lam, alpha) -> None:
    """Print the largest ring size with resolved peaks for a regime."""
    result = visibility_Nmax(lam, alpha, regime)
    suffix = " (order of magnitude)" if result.order_of_magnitude else ""
    click.echo(f"{result.n_max!r}{suffix}")
