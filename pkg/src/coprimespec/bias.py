"""Correlogram bias windows and main-lobe measurement.

The expected value of the coarray correlogram is the true spectrum
convolved with a window W, the (normalized) Fourier transform of the
weight function z(l). Because z is the ordered-pair autocorrelation of
the sampling pattern, W also equals |A(w)|^2 / s where A is the pattern's
frequency response; that factorization proves W >= 0 and gives an exact,
branch-free value at frequencies where the closed form degenerates to
0/0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diffsets import LagTable
from .errors import AsymmetricLagTableError, NoMinimumFoundError, UnsupportedSchemeError
from .schemes import InstantSet, SchemeConfig, SchemeKind, sample_instants
from .spectra import frequency_grid

# Below this magnitude of sin(w*M) or sin(w*N) the sine-ratio form is
# ill-conditioned; those grid points are evaluated through |A(w)|^2.
_SINGULARITY_GUARD = 1e-4


@dataclass(frozen=True, eq=False)
class BiasWindow:
    """Sampled correlogram bias window on a [0, pi] frequency grid."""

    omega_grid: np.ndarray
    values: np.ndarray
    normalization: float
    config: SchemeConfig | None = None

    @property
    def grid_size(self) -> int:
        return int(self.omega_grid.size)


def pattern_transform(instants: InstantSet, omega: np.ndarray) -> np.ndarray:
    """Frequency response A(w) = sum over instants of exp(j*w*t).

    Duplicated instants (prototype's coinciding zeroth samples) count once
    per acquisition event, keeping |A|^2 consistent with ordered-pair
    enumeration.
    """
    t = instants.combined.astype(np.float64)
    return np.exp(1j * np.outer(np.asarray(omega, dtype=np.float64), t)).sum(axis=1)


def bias_from_weights(
    table: LagTable, grid_size: int = 4096, normalization: float | None = None
) -> BiasWindow:
    """Bias window as the transform of a lag-weight table.

    W(w) = (1/s) * sum over lags of z(l) * cos(w*l); the sine part cancels
    because the table is lag-symmetric (checked, raising
    :class:`AsymmetricLagTableError` otherwise). Works for every scheme
    kind. ``normalization`` defaults to the table's total pair count,
    which gives W(0) = 1.
    """
    for lag, value in table.weights.items():
        if table.weights.get(-lag) != value:
            raise AsymmetricLagTableError(
                f"weight at lag {lag} is {value} but at {-lag} is {table.weights.get(-lag)}"
            )
    s = float(table.total_pairs if normalization is None else normalization)
    if s <= 0:
        raise ValueError(f"normalization must be positive, got {s}")
    omega = frequency_grid(grid_size)
    lags, weights = table.as_arrays()
    values = np.cos(np.outer(omega, lags.astype(np.float64))) @ weights.astype(np.float64)
    return BiasWindow(omega_grid=omega, values=values / s, normalization=s, config=table.config)


def closed_window_values(config: SchemeConfig, omega: np.ndarray) -> np.ndarray:
    """Closed-form super-Nyquist window evaluated at arbitrary frequencies.

    With u = w*r*M*N the (unnormalized value / s) is

        W(w) = (1/s) * { (sin u / sin wM)^2 + (sin u / sin wN)^2
                         + 2*cos(w*(M - N + 1)) * sin^2 u / (sin wM * sin wN) }

    and s is the squared per-snapshot sample count, so W(0) = 1. Points
    where sin(wM) or sin(wN) nearly vanishes are removable singularities
    and are evaluated exactly as |A(w)|^2 / s instead.
    """
    if config.kind is not SchemeKind.SUPER_NYQUIST:
        raise UnsupportedSchemeError(
            "closed-form bias exists only for the super-nyquist kind; "
            "use bias_from_weights for other schemes"
        )
    omega = np.asarray(omega, dtype=np.float64)
    r, m, n = config.periods, config.m, config.n
    s = float(config.pair_count)

    numerator = np.sin(omega * (r * m * n))
    sin_m = np.sin(omega * m)
    sin_n = np.sin(omega * n)
    near_singular = (np.abs(sin_m) < _SINGULARITY_GUARD) | (np.abs(sin_n) < _SINGULARITY_GUARD)

    safe_m = np.where(near_singular, 1.0, sin_m)
    safe_n = np.where(near_singular, 1.0, sin_n)
    values = (
        (numerator / safe_m) ** 2
        + (numerator / safe_n) ** 2
        + 2.0 * np.cos(omega * (m - n + 1)) * numerator**2 / (safe_m * safe_n)
    )
    if np.any(near_singular):
        response = pattern_transform(sample_instants(config), omega[near_singular])
        values[near_singular] = np.abs(response) ** 2
    return values / s


def bias_closed(config: SchemeConfig, grid_size: int = 4096) -> BiasWindow:
    """Closed-form bias window of the super-Nyquist co-prime sampler.

    See :func:`closed_window_values` for the expression; the window is
    sampled on a uniform [0, pi] grid and normalized to unit value at
    zero frequency.
    """
    omega = frequency_grid(grid_size)
    return BiasWindow(
        omega_grid=omega,
        values=closed_window_values(config, omega),
        normalization=float(config.pair_count),
        config=config,
    )


def main_lobe_width(window: BiasWindow) -> float:
    """Two-sided main-lobe width of a bias window, in units of pi.

    The lobe edge is the first local minimum reached walking up from
    w = 0 (first-null convention); the symmetric lobe then spans
    [-w*, +w*], so the returned width is 2*w*/pi. The grid should be
    dense enough to resolve the first null (1024 points or more for the
    schemes handled here).

    Raises
    ------
    NoMinimumFoundError
        If the window never turns back up on (0, pi], e.g. a constant or
        monotone window.
    """
    values = np.asarray(window.values, dtype=np.float64)
    steps = np.diff(values)
    rising = np.nonzero(steps > 0)[0]
    if rising.size == 0:
        raise NoMinimumFoundError("window is non-increasing over the whole grid")
    first_turn = int(rising[0])
    if not np.any(steps[:first_turn] < 0):
        raise NoMinimumFoundError("window rises immediately; no descending main lobe")
    return 2.0 * float(window.omega_grid[first_turn]) / np.pi
