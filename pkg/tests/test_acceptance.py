"""Acceptance suite: one test per release criterion.

Each test prints a single PASS line once its assertions hold, so running
``pytest tests/test_acceptance.py -v -s`` doubles as the sign-off
checklist. Tolerances and runtime budgets are pinned here, not
configurable.
"""

import math
import time

import numpy as np
import pytest

from coprimespec.bias import bias_closed, bias_from_weights, main_lobe_width, pattern_transform
from coprimespec.diffsets import verify_structure, weight_closed, weight_enumerated
from coprimespec.estimator import (
    LagAccumulator,
    accumulate_snapshot,
    correlogram_psd,
    find_peaks,
    psd_direct,
    psd_from_accumulator,
)
from coprimespec.experiments import (
    SCENARIO_PERIODS,
    UNREPRESENTABLE,
    map_frequency,
    tones_for_scheme,
)
from coprimespec.schemes import make_scheme, sample_instants
from coprimespec.signals import SignalSpec, generate_samples
from coprimespec.spectra import nearest_bin

PAIRS = ((4, 3), (3, 4), (5, 3), (3, 5))
PERIOD_COUNTS = (1, 2, 3, 4)
GRID = 1024
BIAS_GRID = 4096
SNAPSHOTS = 10
SEED = 0
SAMPLE_RATE_HZ = 500.0


def random_coprime_pairs(count=50, low=2, high=20, seed=20260808):
    rng = np.random.default_rng(seed)
    pairs = []
    while len(pairs) < count:
        m, n = int(rng.integers(low, high + 1)), int(rng.integers(low, high + 1))
        if m != n and math.gcd(m, n) == 1:
            pairs.append((m, n))
    return pairs


def scenario_estimate(kind, tones_hz, snapshots=SNAPSHOTS, seed=SEED):
    config = make_scheme(kind, m=4, n=3, periods=SCENARIO_PERIODS)
    spec = tones_for_scheme(tones_hz, SAMPLE_RATE_HZ, config, seed)
    return config, spec, correlogram_psd(config, spec, snapshots, GRID)


def peak_bins(estimate, count):
    return sorted(round(p[0] * (GRID - 1)) for p in find_peaks(estimate, count))


def expect_bins(nus):
    return sorted(nearest_bin(nu, GRID) for nu in nus)


def report(number, text):
    print(f"ACCEPTANCE {number:02d}: {text} ... PASS")


def test_criterion_01_weight_oracle_equivalence():
    start = time.perf_counter()
    for m, n in PAIRS:
        for periods in PERIOD_COUNTS:
            config = make_scheme("super-nyquist", m=m, n=n, periods=periods)
            closed = weight_closed(config)
            enumerated = weight_enumerated(sample_instants(config))
            assert closed.weights == enumerated.weights, (m, n, periods)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report(1, f"closed-form weights equal enumeration exactly, 16 configs in {elapsed:.3f}s")


def test_criterion_02_cross_self_disjoint_and_distinct_count():
    start = time.perf_counter()
    for m, n in random_coprime_pairs():
        reportx = verify_structure(make_scheme("super-nyquist", m=m, n=n))
        assert reportx.self_cross_disjoint, (m, n)
        assert reportx.distinct_cross_count == m * n, (m, n)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    report(2, f"50 random pairs: disjoint cross/self sets, M*N distinct cross lags ({elapsed:.2f}s)")


def test_criterion_03_prototype_two_contributors():
    start = time.perf_counter()
    for m, n in random_coprime_pairs():
        reportx = verify_structure(make_scheme("prototype", m=m, n=n))
        assert reportx.prototype_two_contributors is True, (m, n)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    report(3, f"50 random pairs: every cross-only lag has exactly 2 contributors ({elapsed:.2f}s)")


def test_criterion_04_bias_three_way_agreement():
    start = time.perf_counter()
    worst = 0.0
    for m, n in PAIRS:
        for periods in PERIOD_COUNTS:
            config = make_scheme("super-nyquist", m=m, n=n, periods=periods)
            closed = bias_closed(config, BIAS_GRID)
            transform_of_weights = bias_from_weights(
                weight_enumerated(sample_instants(config)), BIAS_GRID
            )
            response = pattern_transform(sample_instants(config), closed.omega_grid)
            factored = np.abs(response) ** 2 / config.pair_count
            worst = max(
                worst,
                float(np.max(np.abs(closed.values - transform_of_weights.values))),
                float(np.max(np.abs(closed.values - factored))),
            )
    assert worst < 1e-9
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    report(4, f"closed form, weight transform, |A|^2/s agree within {worst:.2e} ({elapsed:.2f}s)")


def test_criterion_05_main_lobe_roughly_halves():
    ratios = {}
    for m, n in PAIRS:
        sn_width = main_lobe_width(bias_closed(make_scheme("super-nyquist", m=m, n=n), BIAS_GRID))
        proto = make_scheme("prototype", m=m, n=n)
        proto_width = main_lobe_width(
            bias_from_weights(weight_enumerated(sample_instants(proto)), BIAS_GRID)
        )
        ratios[(m, n)] = sn_width / proto_width
        assert 0.35 <= ratios[(m, n)] <= 0.65, (m, n, ratios[(m, n)])
    pretty = ", ".join(f"{k}: {v:.3f}" for k, v in ratios.items())
    report(5, f"main-lobe width ratios within [0.35, 0.65] ({pretty})")


def test_criterion_06_main_lobe_shrinks_with_periods():
    widths = [
        main_lobe_width(bias_closed(make_scheme("super-nyquist", m=4, n=3, periods=r), BIAS_GRID))
        for r in PERIOD_COUNTS
    ]
    assert all(a > b for a, b in zip(widths, widths[1:])), widths
    report(6, "main-lobe width strictly decreases over periods 1..4: "
              + ", ".join(f"{w:.4f}" for w in widths))


def test_criterion_07_frequency_table_reproduction():
    expected = {
        ("super-nyquist", 50.0): 0.1,
        ("super-nyquist", 150.0): 0.3,
        ("super-nyquist", 250.0): 0.5,
        ("super-nyquist", 300.0): 0.6,
        ("super-nyquist", 450.0): 0.9,
        ("super-nyquist", 500.0): 1.0,
        ("prototype", 50.0): 0.2,
        ("prototype", 150.0): 0.6,
        ("prototype", 250.0): 1.0,
    }
    for (kind, hz), nu in expected.items():
        assert map_frequency(hz, SAMPLE_RATE_HZ, kind) == nu, (kind, hz)
    for hz in (300.0, 450.0, 500.0):
        assert map_frequency(hz, SAMPLE_RATE_HZ, "prototype") is UNREPRESENTABLE
    report(7, "all 9 table entries exact, 3 prototype entries unrepresentable")


def test_criterion_08_two_tone_scenario_both_schemes():
    start = time.perf_counter()
    _, spec_sn, est_sn = scenario_estimate("super-nyquist", (50.0, 150.0))
    _, spec_p, est_p = scenario_estimate("prototype", (50.0, 150.0))
    sn_bins = peak_bins(est_sn, 2)
    proto_bins = peak_bins(est_p, 2)
    assert all(
        abs(found - true) <= 2
        for found, true in zip(sn_bins, expect_bins(nu for _, nu in spec_sn.tones))
    ), sn_bins
    assert all(
        abs(found - true) <= 2
        for found, true in zip(proto_bins, expect_bins(nu for _, nu in spec_p.tones))
    ), proto_bins
    elapsed = time.perf_counter() - start
    assert elapsed < 2.0
    report(8, f"50/150 Hz peaks within 2 bins for both schemes ({elapsed:.2f}s)")


def test_criterion_09_aliasing_failure_scenario():
    _, spec_sn, est_sn = scenario_estimate("super-nyquist", (50.0, 150.0, 300.0))
    sn_bins = peak_bins(est_sn, 3)
    assert all(
        abs(found - true) <= 2
        for found, true in zip(sn_bins, expect_bins((0.1, 0.3, 0.6)))
    ), sn_bins

    # 300 Hz exceeds the prototype band entirely
    assert map_frequency(300.0, SAMPLE_RATE_HZ, "prototype") is UNREPRESENTABLE
    _, _, est_p = scenario_estimate("prototype", (50.0, 150.0, 300.0))
    true_bin_unfolded = round(
        300.0 / (1 * SAMPLE_RATE_HZ / 2.0) * (GRID - 1)
    )  # lies beyond the grid (index 1228 > 1023)
    p = est_p.psd
    maxima = np.nonzero((p[1:-1] > p[:-2]) & (p[1:-1] > p[2:]))[0] + 1
    assert not np.any(np.abs(maxima - true_bin_unfolded) <= 5)
    report(9, "three-tone scenario: super-Nyquist within 2 bins; prototype has no peak "
              "within 5 bins of the true 300 Hz location")


def test_criterion_10_four_tone_scenario():
    _, spec, estimate = scenario_estimate("super-nyquist", (50.0, 150.0, 300.0, 450.0))
    found = peak_bins(estimate, 4)
    true = expect_bins((0.1, 0.3, 0.6, 0.9))
    assert all(abs(f - t) <= 2 for f, t in zip(found, true)), (found, true)
    report(10, f"four tones recovered within 2 bins: {found}")


def test_criterion_11_estimator_identities():
    # constant input degenerates to the bias window
    config = make_scheme("super-nyquist", m=4, n=3)
    window = bias_from_weights(weight_enumerated(sample_instants(config)), GRID)
    blocks = [
        (sample_instants(config, k), np.ones(config.samples_per_snapshot)) for k in range(5)
    ]
    constant = psd_direct(blocks, GRID, config.pair_count, config=config)
    scale = float(np.max(window.values))
    constant_gap = float(np.max(np.abs(constant.psd - window.values))) / scale
    assert constant_gap < 1e-8

    # positivity and path agreement over 20 random seeded scenarios
    rng = np.random.default_rng(777)
    worst_gap = 0.0
    for _ in range(20):
        m, n = 0, 0
        while math.gcd(m, n) != 1 or m == n:
            m, n = int(rng.integers(2, 9)), int(rng.integers(2, 9))
        scheme = make_scheme(
            str(rng.choice(["prototype", "super-nyquist"])),
            m=m,
            n=n,
            periods=int(rng.integers(1, 3)),
        )
        tones = tuple(
            (float(rng.uniform(0.5, 2.0)), float(rng.uniform(0.05, 0.95)))
            for _ in range(int(rng.integers(1, 4)))
        )
        spec = SignalSpec(
            tones=tones,
            noise_std=float(rng.uniform(0.0, 0.3)),
            seed=int(rng.integers(1_000_000)),
        )
        snapshots = []
        for k in range(3):
            instants = sample_instants(scheme, k)
            snapshots.append((instants, generate_samples(spec, instants)))
        direct = psd_direct(snapshots, 256, scheme.pair_count, config=scheme)
        acc = LagAccumulator()
        for inst, x in snapshots:
            accumulate_snapshot(acc, inst, x)
        lagged = psd_from_accumulator(acc, 256, scheme.pair_count, config=scheme)
        assert float(np.min(direct.psd)) >= -1e-10
        assert float(np.min(lagged.psd)) >= -1e-10
        gap = float(np.max(np.abs(direct.psd - lagged.psd))) / float(np.max(np.abs(direct.psd)))
        worst_gap = max(worst_gap, gap)
    assert worst_gap < 1e-8
    report(11, f"constant-signal gap {constant_gap:.2e}; paths agree within {worst_gap:.2e}; "
               "PSD non-negative in 20 scenarios")


def test_criterion_12_multi_level_consistency():
    for periods in (1, 2):
        two_level = make_scheme("multi-level", levels=(3, 4), periods=periods)
        reference = make_scheme("super-nyquist", m=4, n=3, periods=periods)
        a = sample_instants(two_level)
        b = sample_instants(reference)
        np.testing.assert_array_equal(a.combined, b.combined)
        assert weight_enumerated(a).weights == weight_enumerated(b).weights

    three_level = make_scheme("multi-level", levels=(2, 3, 5), periods=2)
    assert three_level.grid_denominator == 3
    table = weight_enumerated(sample_instants(three_level))
    assert sum(table.weights.values()) == (2 * (2 + 3 + 5)) ** 2
    assert all(table.weight(-lag) == w for lag, w in table.weights.items())
    report(12, "two-level pattern equals the super-Nyquist pair; three-level table sums to "
               "(r * sum of levels)^2 on the 1/3 grid")
