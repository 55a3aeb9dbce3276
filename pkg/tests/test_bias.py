import numpy as np
import pytest

from coprimespec.bias import (
    BiasWindow,
    bias_closed,
    bias_from_weights,
    closed_window_values,
    main_lobe_width,
    pattern_transform,
)
from coprimespec.diffsets import LagTable, weight_closed, weight_enumerated
from coprimespec.errors import (
    AsymmetricLagTableError,
    NoMinimumFoundError,
    UnsupportedSchemeError,
)
from coprimespec.schemes import make_scheme, sample_instants
from coprimespec.spectra import frequency_grid

PAIRS = ((4, 3), (3, 4), (5, 3), (3, 5))


def sn(m, n, periods=1):
    return make_scheme("super-nyquist", m=m, n=n, periods=periods)


def proto_window(m, n, grid=4096):
    config = make_scheme("prototype", m=m, n=n)
    return bias_from_weights(weight_enumerated(sample_instants(config)), grid)


class TestClosedForm:
    def test_unit_value_at_zero_frequency(self):
        window = bias_closed(sn(4, 3))
        assert window.normalization == 49.0
        assert window.values[0] == pytest.approx(1.0, abs=1e-12)

    def test_limit_near_zero_frequency(self):
        # direct sine-ratio arithmetic at w = 1e-6, no singularity fallback
        w, m, n = 1e-6, 4, 3
        num = np.sin(w * m * n)
        value = (
            (num / np.sin(w * m)) ** 2
            + (num / np.sin(w * n)) ** 2
            + 2 * np.cos(w * (m - n + 1)) * num**2 / (np.sin(w * m) * np.sin(w * n))
        ) / 49.0
        assert value == pytest.approx(1.0, abs=1e-9)
        assert closed_window_values(sn(4, 3), np.array([w]))[0] == pytest.approx(1.0, abs=1e-9)

    def test_rejects_prototype(self):
        with pytest.raises(UnsupportedSchemeError):
            bias_closed(make_scheme("prototype", m=4, n=3))

    @pytest.mark.parametrize("pair", PAIRS)
    @pytest.mark.parametrize("periods", [1, 2, 3, 4])
    def test_three_way_agreement(self, pair, periods):
        config = sn(*pair, periods=periods)
        closed = bias_closed(config, 4096)
        from_enumerated = bias_from_weights(
            weight_enumerated(sample_instants(config)), 4096
        )
        from_closed_table = bias_from_weights(weight_closed(config), 4096)
        response = pattern_transform(sample_instants(config), closed.omega_grid)
        factored = np.abs(response) ** 2 / config.pair_count
        assert np.max(np.abs(closed.values - from_enumerated.values)) < 1e-9
        assert np.max(np.abs(closed.values - from_closed_table.values)) < 1e-9
        assert np.max(np.abs(closed.values - factored)) < 1e-9

    def test_singularity_continuity(self):
        for pair in PAIRS:
            config = sn(*pair)
            omega = frequency_grid(4096)
            singular = omega[
                (np.abs(np.sin(omega * config.m)) < 1e-9)
                | (np.abs(np.sin(omega * config.n)) < 1e-9)
            ]
            assert singular.size > 0
            at = closed_window_values(config, singular)
            above = closed_window_values(config, singular + 1e-7)
            below = closed_window_values(config, np.abs(singular - 1e-7))
            assert np.max(np.abs(above - at)) < 1e-4
            assert np.max(np.abs(below - at)) < 1e-4

    def test_values_non_negative(self):
        for pair in PAIRS:
            assert np.min(bias_closed(sn(*pair), 4096).values) > -1e-12


class TestFromWeights:
    def test_single_impulse_gives_flat_window(self):
        config = make_scheme("prototype", m=2, n=1)
        table = LagTable(
            weights={0: 1}, max_lag=0, total_pairs=1, config=config, source="enumerated"
        )
        window = bias_from_weights(table, 64, normalization=4.0)
        np.testing.assert_allclose(window.values, 0.25)

    def test_asymmetric_table_rejected(self):
        config = make_scheme("prototype", m=2, n=1)
        table = LagTable(
            weights={1: 1}, max_lag=1, total_pairs=1, config=config, source="enumerated"
        )
        with pytest.raises(AsymmetricLagTableError):
            bias_from_weights(table, 64)

    def test_prototype_swap_windows_identical(self):
        np.testing.assert_array_equal(proto_window(4, 3).values, proto_window(3, 4).values)

    def test_super_nyquist_swap_windows_differ(self):
        a = bias_closed(sn(4, 3), 4096)
        b = bias_closed(sn(3, 4), 4096)
        assert np.max(np.abs(a.values - b.values)) > 1e-3

    def test_works_for_multi_level(self):
        config = make_scheme("multi-level", levels=(2, 3, 5))
        table = weight_enumerated(sample_instants(config))
        window = bias_from_weights(table, 2048)
        assert window.values[0] == pytest.approx(1.0, abs=1e-12)
        assert np.min(window.values) > -1e-12


class TestMainLobeWidth:
    def test_constant_window_has_no_null(self):
        omega = frequency_grid(2048)
        window = BiasWindow(omega, np.full(2048, 0.7), 1.0, None)
        with pytest.raises(NoMinimumFoundError):
            main_lobe_width(window)

    def test_monotone_window_has_no_null(self):
        omega = frequency_grid(2048)
        window = BiasWindow(omega, np.linspace(1.0, 0.1, 2048), 1.0, None)
        with pytest.raises(NoMinimumFoundError):
            main_lobe_width(window)

    def test_rising_window_has_no_descending_lobe(self):
        omega = frequency_grid(2048)
        window = BiasWindow(omega, np.linspace(0.1, 1.0, 2048), 1.0, None)
        with pytest.raises(NoMinimumFoundError):
            main_lobe_width(window)

    @pytest.mark.parametrize("pair", PAIRS)
    def test_width_roughly_halves_versus_prototype(self, pair):
        ratio = main_lobe_width(bias_closed(sn(*pair), 4096)) / main_lobe_width(
            proto_window(*pair)
        )
        assert 0.35 <= ratio <= 0.65

    def test_width_shrinks_with_more_periods(self):
        widths = [
            main_lobe_width(bias_closed(sn(4, 3, periods=r), 4096)) for r in (1, 2, 3, 4)
        ]
        assert all(a > b for a, b in zip(widths, widths[1:]))
