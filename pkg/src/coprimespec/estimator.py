"""Coarray correlogram estimation from sub-Nyquist snapshots.

Two equivalent computation paths are kept side by side on purpose. The
lag path accumulates per-snapshot products x(t_i)*x(t_j) at every
available lag and transforms the sums; the direct path evaluates the
squared magnitude of each snapshot's nonuniform transform and averages.
They are algebraically identical, so their numerical agreement is a
standing cross-check, and both are positive by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .diffsets import LagTable
from .errors import LengthMismatchError
from .schemes import InstantSet, SchemeConfig, sample_instants
from .signals import SignalSpec, generate_samples
from .spectra import SpectrumEstimate, frequency_grid


@dataclass
class LagAccumulator:
    """Running per-lag sums of ordered sample products across snapshots."""

    sums: dict[int, float] = field(default_factory=dict)
    snapshots_seen: int = 0


def accumulate_snapshot(
    acc: LagAccumulator, instants: InstantSet, samples: Sequence[float]
) -> LagAccumulator:
    """Add one snapshot's ordered-pair products to the accumulator.

    For every ordered pair (i, j) of combined instants the product
    x_i * x_j is added to the sum at lag t_i - t_j. Sums at +l and -l are
    built from the same products in the same order, so the symmetry
    sums(l) == sums(-l) holds exactly, not just to rounding.
    """
    x = np.asarray(samples, dtype=np.float64)
    t = instants.combined
    if x.shape != t.shape:
        raise LengthMismatchError(
            f"{x.size} sample values for {t.size} instants"
        )
    lag_matrix = t[:, None] - t[None, :]
    products = np.outer(x, x)
    keep = lag_matrix >= 0
    lags, inverse = np.unique(lag_matrix[keep], return_inverse=True)
    sums = np.bincount(inverse, weights=products[keep])
    for lag, value in zip(lags.tolist(), sums.tolist()):
        acc.sums[lag] = acc.sums.get(lag, 0.0) + value
        if lag > 0:
            acc.sums[-lag] = acc.sums.get(-lag, 0.0) + value
    acc.snapshots_seen += 1
    return acc


def autocorrelation_estimate(acc: LagAccumulator, table: LagTable) -> dict[int, float]:
    """Per-lag autocorrelation estimates r(l) = sums(l) / (K * z(l)).

    Only lags the scheme actually covers (z(l) > 0) appear in the output;
    holes are absent rather than zero-filled.
    """
    if acc.snapshots_seen < 1:
        raise ValueError("accumulator holds no snapshots")
    stray = set(acc.sums) - set(table.weights)
    if stray:
        raise ValueError(
            f"accumulated lags {sorted(stray)[:5]}... are outside the table's support; "
            "the accumulator and lag table come from different schemes"
        )
    k = acc.snapshots_seen
    return {
        lag: acc.sums.get(lag, 0.0) / (k * weight)
        for lag, weight in sorted(table.weights.items())
    }


def psd_from_accumulator(
    acc: LagAccumulator,
    grid_size: int,
    normalization: float,
    config: SchemeConfig | None = None,
) -> SpectrumEstimate:
    """Correlogram PSD as the transform of accumulated lag sums.

    P(w) = (1 / (K * s)) * sum over lags of sums(l) * cos(w*l). The sine
    part cancels because the sums are exactly symmetric.
    """
    if acc.snapshots_seen < 1:
        raise ValueError("accumulator holds no snapshots")
    omega = frequency_grid(grid_size)
    lags = np.array(sorted(acc.sums), dtype=np.float64)
    values = np.array([acc.sums[int(l)] for l in lags], dtype=np.float64)
    psd = np.cos(np.outer(omega, lags)) @ values
    psd /= acc.snapshots_seen * float(normalization)
    return SpectrumEstimate(
        omega_grid=omega,
        psd=psd,
        snapshots=acc.snapshots_seen,
        normalization=float(normalization),
        config=config,
    )


def psd_direct(
    snapshots: Iterable[tuple[InstantSet, Sequence[float]]],
    grid_size: int,
    normalization: float,
    config: SchemeConfig | None = None,
) -> SpectrumEstimate:
    """Correlogram PSD as averaged squared nonuniform transforms.

    Each snapshot's instants are re-based to its own start before the
    transform, matching the rule that sample pairs are only ever formed
    within a snapshot:

        P(w) = (1 / (K * s)) * sum over snapshots of
               | sum over instants of x * exp(-j*w*tau) |^2
    """
    omega = frequency_grid(grid_size)
    power = np.zeros(int(grid_size), dtype=np.float64)
    count = 0
    for instants, samples in snapshots:
        x = np.asarray(samples, dtype=np.float64)
        if x.shape != instants.combined.shape:
            raise LengthMismatchError(f"{x.size} sample values for {len(instants)} instants")
        tau = (instants.combined - instants.snapshot_index * instants.snapshot_span).astype(
            np.float64
        )
        transform = np.exp(-1j * np.outer(omega, tau)) @ x
        power += np.abs(transform) ** 2
        count += 1
    if count < 1:
        raise ValueError("psd_direct needs at least one snapshot")
    psd = power / (count * float(normalization))
    return SpectrumEstimate(
        omega_grid=omega,
        psd=psd,
        snapshots=count,
        normalization=float(normalization),
        config=config,
    )


def correlogram_psd(
    config: SchemeConfig,
    spec: SignalSpec,
    snapshots: int,
    grid_size: int = 1024,
    method: str = "direct",
) -> SpectrumEstimate:
    """Estimate the PSD of a test signal acquired with a sampling scheme.

    Generates ``snapshots`` consecutive acquisition blocks of the signal,
    then runs either the direct squared-transform path or the lag-sum
    path (``method`` is ``"direct"`` or ``"lags"``); the two agree to
    numerical precision. Normalization is the scheme's ordered pair
    count, the same constant the bias window uses, so a unit-power flat
    input reproduces the bias window itself.
    """
    if snapshots < 1:
        raise ValueError(f"snapshot count must be >= 1, got {snapshots}")
    blocks = []
    for index in range(snapshots):
        instants = sample_instants(config, index)
        blocks.append((instants, generate_samples(spec, instants)))
    s = float(config.pair_count)
    if method == "direct":
        return psd_direct(blocks, grid_size, s, config=config)
    if method == "lags":
        acc = LagAccumulator()
        for instants, samples in blocks:
            accumulate_snapshot(acc, instants, samples)
        return psd_from_accumulator(acc, grid_size, s, config=config)
    raise ValueError(f"unknown method {method!r}; expected 'direct' or 'lags'")


def find_peaks(spectrum: SpectrumEstimate, count: int) -> list[tuple[float, float]]:
    """Strongest strict local maxima of a spectrum.

    Returns up to ``count`` peaks as (omega/pi, power) tuples, sorted by
    power descending; equal powers are listed lower frequency first.
    Grid endpoints never qualify, and a monotone spectrum yields an empty
    list.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    p = np.asarray(spectrum.psd, dtype=np.float64)
    interior = np.nonzero((p[1:-1] > p[:-2]) & (p[1:-1] > p[2:]))[0] + 1
    if interior.size == 0:
        return []
    order = np.lexsort((interior, -p[interior]))
    chosen = interior[order][: int(count)]
    return [(float(spectrum.omega_grid[i] / np.pi), float(p[i])) for i in chosen]
