"""Free-fermion enumeration of the transverse-field Ising spectrum.

A Jordan-Wigner transformation maps the ring onto free fermions with
one-particle energies

    e(phi) = 2 sqrt(1 - 2 lambda cos phi + lambda^2) >= 0,

sampled on two momentum grids: the Even (antiperiodic) sector uses
phi_j = pi (2j + 1) / N and the Odd (periodic) sector uses phi_j = 2 pi j / N,
j = 0..N-1.  A many-body level is E = sum_j e_j (n_j - 1/2) over occupation
numbers n_j in {0, 1}, and the physical spectrum keeps, per sector, only one
occupation parity:

    |lambda| <  1:  both sectors, even sum(n_j) only;
    |lambda| >  1:  antiperiodic sector with even sum(n_j),
                    periodic sector with odd sum(n_j);
    |lambda| == 1:  the |lambda| < 1 rule (both conventions agree there).

Either way exactly 2^N energies survive.  Both grids are invariant under
phi -> pi - phi, which realizes the lambda -> -lambda spectral invariance
exactly, so negative lambda is enumerated via |lambda|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapExceeded, InvalidArgs, OddN
from .model import IsingParams, ManyBodySpectrum

DEFAULT_MAX_SITES = 22

_SECTOR_NAMES = {
    "even": "even",
    "antiperiodic": "even",
    "odd": "odd",
    "periodic": "odd",
}


@dataclass(frozen=True)
class SectorSpec:
    """One fermionic sector: parity label, momentum grid, one-particle energies."""

    parity: str
    phases: np.ndarray
    one_particle: np.ndarray


def one_particle_energy(lam: float, phi: float | np.ndarray) -> float | np.ndarray:
    """Dispersion e(phi) = 2 sqrt(1 - 2 lambda cos phi + lambda^2) >= 0."""
    radicand = 1.0 - 2.0 * lam * np.cos(phi) + lam * lam
    result = 2.0 * np.sqrt(np.maximum(radicand, 0.0))
    return float(result) if np.isscalar(phi) else result


def momentum_grid(N: int, parity: str) -> np.ndarray:
    """Sorted momentum phases in [0, 2 pi) for one sector of an even-N ring."""
    if N % 2 != 0:
        raise OddN(f"free-fermion sectors require even N, got {N}")
    key = _SECTOR_NAMES.get(parity)
    if key is None:
        raise InvalidArgs(
            f"parity must name the even/antiperiodic or odd/periodic sector, "
            f"got {parity!r}"
        )
    j = np.arange(N)
    if key == "even":
        return math.pi * (2 * j + 1) / N
    return 2 * math.pi * j / N


def sector_spec(N: int, lam: float, parity: str) -> SectorSpec:
    """Build one sector's grid and one-particle energies."""
    phases = momentum_grid(N, parity)
    return SectorSpec(
        parity=_SECTOR_NAMES[parity],
        phases=phases,
        one_particle=one_particle_energy(lam, phases),
    )


def _sector_levels(energies: np.ndarray, keep_even: bool) -> np.ndarray:
    """All sum_j e_j (n_j - 1/2) with the requested occupation parity.

    Builds the 2^N subset sums by doubling: after processing j levels the
    arrays hold all subset sums of the first j energies with their parities.
    """
    sums = np.zeros(1)
    parity = np.zeros(1, dtype=np.int8)
    for e in energies:
        sums = np.concatenate([sums, sums + e])
        parity = np.concatenate([parity, parity ^ 1])
    sums -= 0.5 * energies.sum()
    mask = parity == (0 if keep_even else 1)
    return sums[mask]


def enumerate_spectrum(
    N: int, lam: float, max_sites: int = DEFAULT_MAX_SITES
) -> ManyBodySpectrum:
    """Exact sorted 2^N spectrum from the free-fermion sector rules."""
    if N % 2 != 0:
        raise OddN(f"free-fermion enumeration requires even N, got {N}")
    if N > max_sites:
        raise CapExceeded(
            f"enumerate_spectrum materializes 2^N energies; N={N} exceeds "
            f"cap {max_sites}"
        )
    size = abs(lam)
    even = sector_spec(N, size, "even")
    odd = sector_spec(N, size, "odd")
    odd_keeps_even_occupation = size <= 1.0
    energies = np.concatenate(
        [
            _sector_levels(even.one_particle, keep_even=True),
            _sector_levels(odd.one_particle, keep_even=odd_keeps_even_occupation),
        ]
    )
    energies.sort()
    return ManyBodySpectrum(
        energies=energies, method="fermion", params=IsingParams.tfim(N, lam)
    )
