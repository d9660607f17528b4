"""Exact combinatorics of cyclic spin-block configurations.

A length-N cyclic binary string with n up-spins arranged in k maximal
up-blocks (equivalently k down-blocks) exists for 1 <= k <= min(n, N-n),
plus the two polarized strings labeled (n, k) = (0, 0) and (N, 0).  The
number of such strings is

    f(n, k) = (N / k) C(n-1, k-1) C(N-n-1, k-1),

which is always an integer.  With a longitudinal field alpha the diagonal
energies E0 = alpha (N - 2n) + 4k - N group the cells into degeneracy
classes; for rational alpha = p/q in lowest terms the class label

    R = 2 q k - p n

is an integer with E0 = N (alpha - 1) + 2R/q exactly (R = 2k - n and
E0 = 2R at alpha = 1).

Adjacent-pair spin flips that conserve E0 at alpha = 1 fall into three
classes, counted per (n, k) cell over all its configurations:

    a: (n, k) -> (n-2, k-1)   N_a = N comp(n-2, k-1) comp(m, k)
    b: (n, k) -> (n+2, k+1)   N_b = N comp(n, k) comp(m-2, k+1)
    c: (n, k) -> (n, k)       N_c = 2N [A(n,k) B(m,k) + B(n,k) A(m,k)]

with m = N - n, comp(j, r) the number of compositions of j into r positive
parts, A(x, k) = comp(x-1, k) and B(x, k) = comp(x-1, k-1).  N1 and N2
count length-1 and length-2 up-blocks over all compositions of n into k
parts; their boundary values follow from the generating-function
coefficient of weak compositions rather than the binomial shorthand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .errors import CapExceeded, InvalidArgs

BRUTE_FORCE_MAX_SITES = 16


def _comp(j: int, r: int) -> int:
    """Compositions of j into r positive parts; comp(0, 0) = 1."""
    if j == 0 and r == 0:
        return 1
    if j < 1 or r < 1:
        return 0
    return comb(j - 1, r - 1)


def _weak_comp(j: int, r: int) -> int:
    """Weak compositions (parts >= 0) of j into r parts: C(j+r-1, r-1)."""
    if r == 0:
        return 1 if j == 0 else 0
    if j < 0:
        return 0
    return comb(j + r - 1, r - 1)


def _validate_cell(N: int, n: int, k: int) -> None:
    if N < 2:
        raise InvalidArgs(f"ring size must be >= 2, got N={N}")
    if not 0 <= n <= N:
        raise InvalidArgs(f"up-spin count must satisfy 0 <= n <= N, got n={n}")
    if k == 0:
        if n not in (0, N):
            raise InvalidArgs(f"k=0 is reserved for the polarized strings, got n={n}")
    elif not 1 <= k <= min(n, N - n):
        raise InvalidArgs(
            f"block count must satisfy 1 <= k <= min(n, N-n) = "
            f"{min(n, N - n)}, got k={k}"
        )


def cells(N: int, include_polarized: bool = True) -> list[tuple[int, int]]:
    """All valid (n, k) cells of a length-N ring, polarized ones first."""
    out: list[tuple[int, int]] = []
    if include_polarized:
        out.extend([(0, 0), (N, 0)])
    for n in range(1, N):
        out.extend((n, k) for k in range(1, min(n, N - n) + 1))
    return out


def f_count(N: int, n: int, k: int) -> int:
    """Number of cyclic strings in cell (n, k)."""
    _validate_cell(N, n, k)
    if k == 0:
        return 1
    numerator = N * comb(n - 1, k - 1) * comb(N - n - 1, k - 1)
    assert numerator % k == 0
    return numerator // k


def k_bar(N: int, n: int) -> Fraction:
    """Exact mean block count over the C(N, n) strings with n up-spins."""
    if N < 2 or not 0 <= n <= N:
        raise InvalidArgs(f"need 0 <= n <= N and N >= 2, got N={N}, n={n}")
    return Fraction(n * (N - n), N - 1)


def count_N1(n: int, k: int) -> int:
    """Total number of length-1 parts over all compositions of n into k parts."""
    if k < 1 or n < k:
        raise InvalidArgs(f"compositions need 1 <= k <= n, got n={n}, k={k}")
    return k * _weak_comp(n - k, k - 1)


def count_N2(n: int, k: int) -> int:
    """Total number of length-2 parts over all compositions of n into k parts."""
    if k < 1 or n < k:
        raise InvalidArgs(f"compositions need 1 <= k <= n, got n={n}, k={k}")
    return k * _weak_comp(n - k - 1, k - 1)


def _require_partition(N: int, n: int, m: int, k: int) -> None:
    if m != N - n:
        raise InvalidArgs(f"m must equal N - n, got N={N}, n={n}, m={m}")
    _validate_cell(N, n, k)


def count_Na(N: int, n: int, m: int, k: int) -> int:
    """E0-conserving flips of a whole 2-up-block: (n, k) -> (n-2, k-1)."""
    _require_partition(N, n, m, k)
    return N * _comp(n - 2, k - 1) * _comp(m, k)


def count_Nb(N: int, n: int, m: int, k: int) -> int:
    """E0-conserving flips of an interior down-pair: (n, k) -> (n+2, k+1)."""
    _require_partition(N, n, m, k)
    return N * _comp(n, k) * _comp(m - 2, k + 1)


def count_Nc(N: int, n: int, m: int, k: int) -> int:
    """E0-conserving flips of an up-down boundary pair: (n, k) -> (n, k)."""
    _require_partition(N, n, m, k)

    def A(x: int) -> int:
        return _comp(x - 1, k)

    def B(x: int) -> int:
        return _comp(x - 1, k - 1)

    return 2 * N * (A(n) * B(m) + B(n) * A(m))


@dataclass(frozen=True)
class BlockCensus:
    """Formula-built f(n, k) table for one ring size."""

    N: int
    table: dict[tuple[int, int], int]
    polarized: dict[tuple[int, int], int]


def block_census(N: int) -> BlockCensus:
    table = {
        (n, k): f_count(N, n, k) for n, k in cells(N, include_polarized=False)
    }
    return BlockCensus(N=N, table=table, polarized={(0, 0): 1, (N, 0): 1})


@dataclass(frozen=True)
class DegeneracyCensus:
    """Degeneracy classes of the diagonal energies at exact rational alpha."""

    N: int
    alpha: Fraction
    classes: dict[int, int]
    energy_of: dict[int, Fraction]


def _as_fraction(alpha: object) -> Fraction:
    if isinstance(alpha, bool) or isinstance(alpha, float):
        raise InvalidArgs(
            "degeneracy grouping needs an exact rational alpha; pass an int, "
            "a Fraction, or a 'p/q' string"
        )
    if isinstance(alpha, (int, Fraction)):
        return Fraction(alpha)
    if isinstance(alpha, str):
        try:
            return Fraction(alpha)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgs(f"cannot parse alpha {alpha!r} as a rational") from exc
    raise InvalidArgs(f"unsupported alpha type {type(alpha).__name__}")


def degeneracy_census(N: int, alpha: object) -> DegeneracyCensus:
    """Group all 2^N basis states by exact diagonal energy E0.

    Classes are labeled by the integer R = 2qk - pn (alpha = p/q in lowest
    terms), with E0(R) = N (alpha - 1) + 2R/q.
    """
    frac = _as_fraction(alpha)
    p, q = frac.numerator, frac.denominator
    classes: dict[int, int] = {}
    for n, k in cells(N):
        R = 2 * q * k - p * n
        classes[R] = classes.get(R, 0) + f_count(N, n, k)
    assert sum(classes.values()) == 2**N
    ordered = dict(sorted(classes.items()))
    energy_of = {R: N * (frac - 1) + Fraction(2 * R, q) for R in ordered}
    return DegeneracyCensus(N=N, alpha=frac, classes=ordered, energy_of=energy_of)


@dataclass(frozen=True)
class BruteForceCensus:
    """Tables from an exhaustive scan over all 2^N strings (test oracle)."""

    N: int
    f_table: dict[tuple[int, int], int]
    transitions: dict[tuple[int, int], dict[str, int]] = field(repr=False)
    unit_blocks: dict[tuple[int, int], int] = field(repr=False)
    double_blocks: dict[tuple[int, int], int] = field(repr=False)
    classes_alpha1: dict[int, int] = field(repr=False)


def brute_force_census(N: int, max_sites: int = BRUTE_FORCE_MAX_SITES) -> BruteForceCensus:
    """Scan every length-N binary string and tabulate everything exactly.

    Independent of the closed-form counts: block structure is read off each
    string via bit operations, transitions by flipping each adjacent pair.
    """
    if N > max_sites:
        raise CapExceeded(f"brute-force census scans 2^N strings; N={N} > {max_sites}")
    if N < 2:
        raise InvalidArgs(f"ring size must be >= 2, got N={N}")
    size = 1 << N
    mask = size - 1
    b = np.arange(size, dtype=np.int64)

    def popcount(x: np.ndarray) -> np.ndarray:
        total = np.zeros_like(x)
        for i in range(N):
            total += (x >> i) & 1
        return total

    left = ((b << 1) | (b >> (N - 1))) & mask  # bit i = original bit i-1
    right = ((b >> 1) | ((b & 1) << (N - 1))) & mask  # bit i = original bit i+1
    right2 = ((b >> 2) | ((b & 3) << (N - 2))) & mask  # bit i = original bit i+2
    n_of = popcount(b)
    k_of = popcount(b & ~left & mask)
    unit_of = popcount(b & ~left & ~right & mask)
    double_of = popcount(b & ~left & right & ~right2 & mask)

    n_cells = (N + 1) * (N + 2)
    cell_id = n_of * (N + 2) + k_of
    f_counts = np.bincount(cell_id, minlength=n_cells)
    unit_totals = np.bincount(cell_id, weights=unit_of, minlength=n_cells)
    double_totals = np.bincount(cell_id, weights=double_of, minlength=n_cells)

    class_totals = {"a": np.zeros(n_cells, dtype=np.int64)}
    class_totals["b"] = np.zeros(n_cells, dtype=np.int64)
    class_totals["c"] = np.zeros(n_cells, dtype=np.int64)
    for p in range(N):
        pair = (1 << p) | (1 << ((p + 1) % N))
        flipped = b ^ pair
        dn = n_of[flipped] - n_of
        dk = k_of[flipped] - k_of
        for name, want in (("a", (-2, -1)), ("b", (2, 1)), ("c", (0, 0))):
            sel = (dn == want[0]) & (dk == want[1])
            class_totals[name] += np.bincount(
                cell_id[sel], minlength=n_cells
            ).astype(np.int64)

    def cell_of(idx: int) -> tuple[int, int]:
        return idx // (N + 2), idx % (N + 2)

    f_table = {
        cell_of(i): int(c) for i, c in enumerate(f_counts) if c
    }
    transitions: dict[tuple[int, int], dict[str, int]] = {}
    for i in range(n_cells):
        entry = {name: int(class_totals[name][i]) for name in ("a", "b", "c")}
        if any(entry.values()):
            transitions[cell_of(i)] = entry
    unit_blocks = {
        cell_of(i): int(round(t)) for i, t in enumerate(unit_totals) if t
    }
    double_blocks = {
        cell_of(i): int(round(t)) for i, t in enumerate(double_totals) if t
    }
    R_values = 2 * k_of - n_of
    offsets = np.bincount(R_values + N, minlength=2 * N + 1)
    classes_alpha1 = {
        int(R) - N: int(c) for R, c in enumerate(offsets) if c
    }
    return BruteForceCensus(
        N=N,
        f_table=f_table,
        transitions=transitions,
        unit_blocks=unit_blocks,
        double_blocks=double_blocks,
        classes_alpha1=classes_alpha1,
    )
