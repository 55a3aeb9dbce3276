#!/usr/bin/env python3
"""Sub-Nyquist spectrum estimation and the aliasing failure mode.

Both patterns run their converters at the same slow rates, but the
half-period offset doubles the measurable band: with f_s = 500 Hz the
prototype grid tops out at 250 Hz while the offset grid reaches 500 Hz.
A 300 Hz band therefore aliases to 200 Hz on the prototype grid and is
recovered correctly on the offset grid.
"""

from _bootstrap import OUTPUT_DIR

from coprimespec import correlogram_psd, find_peaks, make_scheme
from coprimespec.experiments import SCENARIO_PERIODS, emit_psd, map_frequency, tones_for_scheme

F_S = 500.0
GRID = 1024
SNAPSHOTS = 10


def estimate(kind, tones_hz, seed=0):
    config = make_scheme(kind, m=4, n=3, periods=SCENARIO_PERIODS)
    spec = tones_for_scheme(tones_hz, F_S, config, seed)
    return config, correlogram_psd(config, spec, SNAPSHOTS, GRID)


def print_peaks(config, psd_estimate, tones_hz, count):
    q = config.grid_denominator
    peaks = find_peaks(psd_estimate, count)
    print(f"  top {count} peaks of the {config.kind.value} estimate:")
    for omega_over_pi, power in sorted(peaks):
        hz = omega_over_pi * q * F_S / 2.0
        print(f"    omega/pi = {omega_over_pi:.4f}  -> {hz:6.1f} Hz   power {power:.3f}")


def main():
    print(f"two bands at 50 and 150 Hz, f_s = {F_S:g} Hz, K = {SNAPSHOTS} snapshots")
    for kind in ("super-nyquist", "prototype"):
        config, est = estimate(kind, (50.0, 150.0))
        print_peaks(config, est, (50.0, 150.0), 2)

    print("\nadd a 300 Hz band:")
    print(f"  normalized position on the offset grid: "
          f"{map_frequency(300.0, F_S, 'super-nyquist')}")
    print(f"  on the prototype grid: {map_frequency(300.0, F_S, 'prototype')!r} "
          "(beyond its 250 Hz band)")
    files = []
    for kind in ("super-nyquist", "prototype"):
        config, est = estimate(kind, (50.0, 150.0, 300.0))
        print_peaks(config, est, (50.0, 150.0, 300.0), 3)
        files += emit_psd(OUTPUT_DIR, f"psd_three_bands_{config.slug()}", est, seed=0)
    print("  the prototype's third peak sits at 200 Hz, the alias of 300 Hz: "
          "same converters, half the usable band.")

    print("\nfour bands at normalized 0.1, 0.3, 0.6, 0.9 of the offset grid:")
    config, est = estimate("super-nyquist", (50.0, 150.0, 300.0, 450.0))
    print_peaks(config, est, (50.0, 150.0, 300.0, 450.0), 4)

    print("\nwrote:")
    for path in files:
        print(f"  {path}")


if __name__ == "__main__":
    main()
