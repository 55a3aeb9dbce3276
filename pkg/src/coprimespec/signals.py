"""Seeded multi-tone test signals evaluated at sparse integer instants."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FrequencyOutOfRangeError
from .schemes import InstantSet
from .spectra import SpectrumEstimate, frequency_grid, nearest_bin


@dataclass(frozen=True)
class SignalSpec:
    """Multi-tone signal description with reproducible randomness.

    Each tone is an ``(amplitude, nu)`` pair with amplitude > 0 and nu
    strictly inside (0, 1), normalized so that nu = 1 corresponds to half
    the virtual sampling rate of whatever scheme evaluates the signal
    (angular frequency pi per virtual tick).

    Snapshots are independent realizations: each one draws its tone
    phases once per tone, uniformly over [0, 2*pi), from a generator
    keyed by (seed, snapshot index), then draws its noise from the same
    stream. That keying makes generation order-independent (snapshots
    can be produced in parallel), keeps everything deterministic for a
    fixed seed, and is why sample pairs are only ever formed within a
    snapshot. Passing ``phases`` pins the phases of every snapshot
    instead of drawing them.
    """

    tones: tuple[tuple[float, float], ...]
    noise_std: float = 0.0
    seed: int = 0
    phases: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        tones = tuple((float(a), float(nu)) for a, nu in self.tones)
        object.__setattr__(self, "tones", tones)
        for amplitude, nu in tones:
            if amplitude <= 0:
                raise ValueError(f"tone amplitude must be positive, got {amplitude}")
            if not 0.0 < nu < 1.0:
                raise FrequencyOutOfRangeError(
                    f"normalized frequency must lie strictly inside (0, 1), got {nu}"
                )
        if self.noise_std < 0:
            raise ValueError(f"noise_std must be non-negative, got {self.noise_std}")
        if self.seed < 0:
            raise ValueError(f"seed must be a non-negative integer, got {self.seed}")
        if self.phases is not None:
            phases = tuple(float(p) for p in self.phases)
            if len(phases) != len(tones):
                raise ValueError(
                    f"got {len(phases)} phases for {len(tones)} tones"
                )
            object.__setattr__(self, "phases", phases)

    def snapshot_rng(self, snapshot_index: int) -> np.random.Generator:
        """Per-snapshot random stream, keyed by (seed, snapshot index)."""
        return np.random.default_rng([self.seed, int(snapshot_index)])

    def resolve_phases(self, snapshot_index: int = 0) -> np.ndarray:
        """Tone phases of one snapshot: explicit if given, else drawn."""
        if self.phases is not None:
            return np.asarray(self.phases, dtype=np.float64)
        return self.snapshot_rng(snapshot_index).uniform(0.0, 2.0 * np.pi, size=len(self.tones))


def generate_samples(
    spec: SignalSpec, instants: InstantSet, grid_denominator: int | None = None
) -> np.ndarray:
    """Evaluate the signal at the given instants, plus optional noise.

    The sample at integer instant t is

        x(t) = sum over tones of A * cos(pi * nu * t + phase) + w

    with w ~ N(0, noise_std^2). Phases are drawn before noise from the
    snapshot's stream, so turning noise on or off never changes them.
    Tone frequencies are already normalized to the virtual rate, so the
    instants' grid denominator never enters the formula; when
    ``grid_denominator`` is passed it is only checked against the
    instants' own grid to catch unit mix-ups. Output is deterministic
    for a fixed (seed, spec, instants).
    """
    if grid_denominator is not None and grid_denominator != instants.config.grid_denominator:
        raise ValueError(
            f"instants live on a 1/{instants.config.grid_denominator} grid, "
            f"not 1/{grid_denominator}"
        )
    t = instants.combined.astype(np.float64)
    rng = spec.snapshot_rng(instants.snapshot_index)
    x = np.zeros_like(t)
    if spec.tones:
        if spec.phases is not None:
            phases = np.asarray(spec.phases, dtype=np.float64)
        else:
            phases = rng.uniform(0.0, 2.0 * np.pi, size=len(spec.tones))
        amplitudes = np.array([a for a, _ in spec.tones], dtype=np.float64)
        nus = np.array([nu for _, nu in spec.tones], dtype=np.float64)
        x = amplitudes @ np.cos(np.pi * nus[:, None] * t[None, :] + phases[:, None])
    if spec.noise_std > 0:
        x = x + rng.normal(0.0, spec.noise_std, size=t.size)
    return x


def reference_spectrum(spec: SignalSpec, grid_size: int) -> SpectrumEstimate:
    """Analytic line spectrum of the tone list, rendered on the grid.

    Each real tone of amplitude A carries power A^2/4 per spectral side;
    that power is deposited at the grid bin nearest pi*nu. This is ground
    truth for peak-location checks, not an estimator, so noise is
    ignored.
    """
    omega = frequency_grid(grid_size)
    psd = np.zeros(int(grid_size), dtype=np.float64)
    for amplitude, nu in spec.tones:
        psd[nearest_bin(nu, grid_size)] += amplitude**2 / 4.0
    return SpectrumEstimate(
        omega_grid=omega, psd=psd, snapshots=0, normalization=1.0, config=None
    )
